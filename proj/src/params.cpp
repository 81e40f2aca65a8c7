#include "dlm/params.hpp"

#include <cmath>
#include <string>

namespace dlm {

namespace {

void require(bool ok, const char* field, double value, const char* bound) {
    if (!ok) {
        throw ValidationError(std::string(field) + " must lie in " + bound +
                              ", got " + std::to_string(value));
    }
    if (!std::isfinite(value)) {
        throw ValidationError(std::string(field) + " must be finite");
    }
}

} // namespace

void ModelParams::validate() const {
    require(alpha > 0.0 && alpha < 1.0, "alpha", alpha, "(0,1)");
    require(c > 0.0 && c <= 1.0, "c", c, "(0,1]");
    require(beta > 0.0, "beta", beta, "(0,inf)");
    require(gamma > 0.0 && gamma < 1.0, "gamma", gamma, "(0,1)");
    require(L1 > 0.0, "L1", L1, "(0,inf)");
    require(B > 0.0, "B", B, "(0,inf)");
    require(A > 0.0, "A", A, "(0,inf)");
}

} // namespace dlm
