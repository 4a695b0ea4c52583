#ifndef FJ_ERRORS_HPP
#define FJ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fj {

struct Error : std::runtime_error {
  std::string code;
  Error(std::string c, const std::string& msg)
      : std::runtime_error(c + ": " + msg), code(std::move(c)) {}
};

struct DivisionByZero : Error {
  explicit DivisionByZero(const std::string& msg = "division by zero")
      : Error("DivisionByZero", msg) {}
};

struct ZeroDivisor : Error {
  explicit ZeroDivisor(const std::string& msg = "series is zero to its precision")
      : Error("ZeroDivisor", msg) {}
};

struct BadWeight : Error {
  explicit BadWeight(const std::string& msg) : Error("BadWeight", msg) {}
};

struct IncompatibleShapes : Error {
  explicit IncompatibleShapes(const std::string& msg) : Error("IncompatibleShapes", msg) {}
};

struct IncompatiblePrecision : Error {
  explicit IncompatiblePrecision(const std::string& msg) : Error("IncompatiblePrecision", msg) {}
};

struct PrecisionTooLow : Error {
  explicit PrecisionTooLow(const std::string& msg) : Error("PrecisionTooLow", msg) {}
};

struct UnsupportedWeight : Error {
  explicit UnsupportedWeight(const std::string& msg) : Error("UnsupportedWeight", msg) {}
};

struct NonInvertibleLeadingCoefficient : Error {
  explicit NonInvertibleLeadingCoefficient(const std::string& msg)
      : Error("NonInvertibleLeadingCoefficient", msg) {}
};

struct NotSymmetric : Error {
  long m, n;
  std::string r;
  NotSymmetric(long m_, long n_, std::string r_)
      : Error("NotSymmetric",
              "symmetry fails at (m,n,r)=(" + std::to_string(m_) + "," +
                  std::to_string(n_) + "," + r_ + ")"),
        m(m_), n(n_), r(std::move(r_)) {}
};

struct DegenerateGram : Error {
  explicit DegenerateGram(const std::string& msg = "gram matrix is degenerate")
      : Error("DegenerateGram", msg) {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& msg) : Error("ParseError", msg) {}
};

}  // namespace fj

#endif
