// The hopfcalc commands. Each returns a Report; run() adds argument parsing
// and maps exceptions to the stable exit codes:
//   0 success, 1 check failure, 2 parse/schema error, 3 precondition violation.
#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hopf/cli/report.hpp"

namespace hopf::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitPrecondition = 3;

/// `ring` ("Z" or "F2") applies to triangulations only.
Report cmd_homology(const std::string& file, std::optional<int> degree, const std::string& ring);
/// kind is sym, quad or hyper. For sym/quad the range is [i, j] (j may be
/// "inf"), or [0, k-1] when k is given; hyper uses [-k, k-1] (k may be "inf").
Report cmd_qgroup(const std::string& file, const std::string& kind, int n, int i, const std::string& j,
                  const std::optional<std::string>& k);
/// Sq^i on H^degree(K; F2) of a triangulation; the class is an explicit
/// cocycle or the given element of the computed cohomology basis.
Report cmd_sq(const std::string& file, int i, int degree, const std::optional<std::string>& cocycle, int generator);
Report cmd_symmetric(const std::string& file, std::optional<int> order, const std::string& ring);
Report cmd_quadratic(const std::string& file, std::optional<int> kmax);
Report cmd_witt(const std::string& file, int n);
Report cmd_wallmu(const std::string& file);
/// degree D | bidegree F G | compose F1 G1 F2 G2 | smash F G | curvint M CHI |
/// curvint M SEMICHAR HOPF | kunneth FILE
Report cmd_hopf(const std::vector<std::string>& args);
Report cmd_check(const std::string& suite, unsigned seed, const std::optional<std::string>& golden);

/// Full command line handling; writes the report (text or --json) to `out`
/// and diagnostics to `err`. Returns the exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hopf::cli
