#ifndef CRPC_ERRORS_HPP
#define CRPC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace crpc {

enum class errc {
    degenerate_ratio,
    invalid_k,
    empty_domain,
    non_positive_s,
    outside_domain,
    quadrature_failure,
    branch_mismatch,
    singular_point,
    umbilic_point,
    degree_blowup,
    invalid_config,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::degenerate_ratio:   return "DegenerateRatio";
        case errc::invalid_k:          return "InvalidK";
        case errc::empty_domain:       return "EmptyDomain";
        case errc::non_positive_s:     return "NonPositiveS";
        case errc::outside_domain:     return "OutsideDomain";
        case errc::quadrature_failure: return "QuadratureFailure";
        case errc::branch_mismatch:    return "BranchMismatch";
        case errc::singular_point:     return "SingularPoint";
        case errc::umbilic_point:      return "UmbilicPoint";
        case errc::degree_blowup:      return "DegreeBlowup";
        case errc::invalid_config:     return "InvalidConfig";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
    errc code() const { return code_; }

private:
    errc code_;
};

/// Which excluded surface class a degenerate curvature ratio corresponds to.
enum class degenerate_case {
    sphere_plane, // k = 0, a = 1
    minimal,      // k = inf, a = -1
    developable,  // k = 1, a in {0, inf}
};

class DegenerateRatioError : public Error {
public:
    DegenerateRatioError(degenerate_case c, const std::string& what)
        : Error(errc::degenerate_ratio, what), case_(c) {}
    degenerate_case excluded_case() const { return case_; }

private:
    degenerate_case case_;
};

} // namespace crpc

#endif
