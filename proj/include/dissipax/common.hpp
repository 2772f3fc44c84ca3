// Copyright (c) the dissipax developers.
// SPDX-License-Identifier: Apache-2.0

#ifndef DISSIPAX_COMMON_HPP
#define DISSIPAX_COMMON_HPP

#include <complex>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>

#include <Eigen/Core>
#include <Eigen/SparseCore>

namespace dissipax
{

using Complex = std::complex<double>;
using VecXc = Eigen::VectorXcd;
using VecXd = Eigen::VectorXd;
using SpMatC = Eigen::SparseMatrix<Complex>;
using SpMatD = Eigen::SparseMatrix<double>;

/// Thrown when a caller violates an operation's precondition.
class ValidationError : public std::runtime_error
{
public:
  explicit ValidationError(const std::string &msg) : std::runtime_error(msg) {}
};

/// Thrown when a factorization or iteration fails beyond recovery.
class SolverError : public std::runtime_error
{
public:
  explicit SolverError(const std::string &msg) : std::runtime_error(msg) {}
};

class IoError : public std::runtime_error
{
public:
  explicit IoError(const std::string &msg) : std::runtime_error(msg) {}
};

namespace detail
{
[[noreturn]] inline void verify_fail(const char *cond, const char *file, int line,
                                     const std::string &msg)
{
  std::ostringstream os;
  os << msg << " (" << cond << " failed at " << file << ":" << line << ")";
  throw ValidationError(os.str());
}
}  // namespace detail

#define DX_VERIFY(cond, msg)                                          \
  do                                                                  \
  {                                                                   \
    if (!(cond))                                                      \
    {                                                                 \
      ::dissipax::detail::verify_fail(#cond, __FILE__, __LINE__, msg); \
    }                                                                 \
  } while (0)

inline constexpr const char *version_string() { return "dissipax 0.1.0"; }

}  // namespace dissipax

#endif  // DISSIPAX_COMMON_HPP
