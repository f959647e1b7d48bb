#include "whlab/core/errors.hpp"

#include <cstdlib>
#include <string>

namespace whlab {

ParseError::ParseError(std::string const& message, std::size_t line, std::size_t column)
    : DomainError("line " + std::to_string(line) +
                  (column ? ", column " + std::to_string(column) : std::string()) + ": " + message),
      line_(line),
      column_(column) {}

void Budget::check(std::size_t dimension, std::string_view what) const {
  if (dimension > max_dimension) {
    throw BudgetExceeded(std::string(what) + " needs dimension " + std::to_string(dimension) +
                         ", budget is " + std::to_string(max_dimension));
  }
}

void Budget::check_dense(std::size_t rows, std::size_t cols, std::size_t bits_per_entry,
                         std::string_view what) const {
  long double bytes = static_cast<long double>(rows) * cols * bits_per_entry / 8;
  if (bytes > static_cast<long double>(max_dimension) * 256) {
    throw BudgetExceeded(std::string(what) + " needs a dense " + std::to_string(rows) + " x " +
                         std::to_string(cols) + " matrix, over the budget of " +
                         std::to_string(max_dimension));
  }
}

Budget Budget::from_environment() {
  Budget budget;
  if (char const* env = std::getenv("WHLAB_BUDGET")) {
    char* end = nullptr;
    unsigned long long value = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) budget.max_dimension = value;
  }
  return budget;
}

}  // namespace whlab
