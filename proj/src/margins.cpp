#include "copulaforge/margins.hpp"

#include <cmath>

#include "copulaforge/errors.hpp"
#include "copulaforge/special.hpp"

namespace copulaforge {

QuantileFn margin_quantile(MarginKind kind) {
    switch (kind) {
    case MarginKind::Uniform:
        return [](double p) { return p; };
    case MarginKind::StdNormal:
        return [](double p) { return norm_quantile(p); };
    case MarginKind::StdExponential:
        return [](double p) { return -std::log1p(-p); };
    }
    throw Error(ErrorKind::NotImplemented, "unknown margin");
}

std::optional<MarginKind> margin_from_name(const std::string& name) {
    if (name == "uniform") return MarginKind::Uniform;
    if (name == "std_normal") return MarginKind::StdNormal;
    if (name == "std_exponential") return MarginKind::StdExponential;
    return std::nullopt;
}

const char* margin_name(MarginKind kind) {
    switch (kind) {
    case MarginKind::Uniform:
        return "uniform";
    case MarginKind::StdNormal:
        return "std_normal";
    case MarginKind::StdExponential:
        return "std_exponential";
    }
    return "?";
}

SampleMatrix apply_margins(const SampleMatrix& u, const std::vector<QuantileFn>& q) {
    if (q.size() != u.d)
        throw Error(ErrorKind::ArityMismatch,
                    "apply_margins: one quantile function per column required");
    SampleMatrix out(u.n, u.d, MarginTag::Transformed);
    for (std::size_t j = 0; j < u.d; ++j)
        for (std::size_t i = 0; i < u.n; ++i) out.at(i, j) = q[j](u.at(i, j));
    return out;
}

} // namespace copulaforge
