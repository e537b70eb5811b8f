#include "wecopt/errors.hpp"

#include <sstream>

namespace wecopt {
namespace {

std::string FormatParse(const std::string& source, std::size_t line,
                        const std::string& message) {
  std::ostringstream os;
  os << source;
  if (line > 0) os << ":" << line;
  os << ": " << message;
  return os.str();
}

std::string FormatNumerical(double omega, const std::string& message) {
  std::ostringstream os;
  os << message << " (omega = " << omega << " rad/s)";
  return os.str();
}

}  // namespace

ParseError::ParseError(const std::string& source, std::size_t line,
                       const std::string& message)
    : Error(FormatParse(source, line, message)), source_(source), line_(line) {}

NumericalError::NumericalError(double omega, const std::string& message)
    : Error(FormatNumerical(omega, message)), omega_(omega) {}

}  // namespace wecopt
