#include "copulaforge/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "copulaforge/errors.hpp"

namespace copulaforge {

namespace {

// Counts inversions in-place with merge sort.
std::size_t merge_count(std::vector<double>& v, std::vector<double>& buf,
                        std::size_t lo, std::size_t hi) {
    if (hi - lo < 2) return 0;
    std::size_t mid = lo + (hi - lo) / 2;
    std::size_t cnt = merge_count(v, buf, lo, mid) + merge_count(v, buf, mid, hi);
    std::size_t i = lo, j = mid, k = lo;
    while (i < mid && j < hi) {
        if (v[j] < v[i]) {
            cnt += mid - i;
            buf[k++] = v[j++];
        } else {
            buf[k++] = v[i++];
        }
    }
    while (i < mid) buf[k++] = v[i++];
    while (j < hi) buf[k++] = v[j++];
    std::copy(buf.begin() + static_cast<long>(lo), buf.begin() + static_cast<long>(hi),
              v.begin() + static_cast<long>(lo));
    return cnt;
}

} // namespace

double kendall_tau(std::span<const double> x, std::span<const double> y) {
    std::size_t n = x.size();
    if (n != y.size() || n < 2)
        throw Error(ErrorKind::InsufficientData, "kendall_tau needs two columns of length >= 2");
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        if (x[a] != x[b]) return x[a] < x[b];
        return y[a] < y[b];
    });
    std::vector<double> ys(n), buf(n);
    for (std::size_t i = 0; i < n; ++i) ys[i] = y[idx[i]];
    double inv = static_cast<double>(merge_count(ys, buf, 0, n));
    double pairs = 0.5 * static_cast<double>(n) * static_cast<double>(n - 1);
    return 1.0 - 2.0 * inv / pairs;
}

double empirical_kendall_tau(const SampleMatrix& s, std::size_t j, std::size_t k) {
    auto cj = s.column(j);
    auto ck = s.column(k);
    return kendall_tau(cj, ck);
}

std::vector<double> ranks(std::span<const double> x) {
    std::size_t n = x.size();
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::sort(idx.begin(), idx.end(),
              [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });
    std::vector<double> r(n);
    for (std::size_t i = 0; i < n; ++i) r[idx[i]] = static_cast<double>(i + 1);
    return r;
}

double spearman_rho(std::span<const double> x, std::span<const double> y) {
    auto rx = ranks(x), ry = ranks(y);
    std::size_t n = x.size();
    double mean = 0.5 * static_cast<double>(n + 1);
    double num = 0.0, dx = 0.0, dy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double a = rx[i] - mean, b = ry[i] - mean;
        num += a * b;
        dx += a * a;
        dy += b * b;
    }
    return num / std::sqrt(dx * dy);
}

double ks_uniform(std::span<const double> u) {
    std::vector<double> s(u.begin(), u.end());
    std::sort(s.begin(), s.end());
    std::size_t n = s.size();
    double d = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double hi = (static_cast<double>(i) + 1.0) / static_cast<double>(n) - s[i];
        double lo = s[i] - static_cast<double>(i) / static_cast<double>(n);
        d = std::max(d, std::max(hi, lo));
    }
    return d;
}

double ks_two_sample(std::span<const double> x, std::span<const double> y) {
    std::vector<double> a(x.begin(), x.end()), b(y.begin(), y.end());
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    std::size_t i = 0, j = 0;
    double d = 0.0;
    double na = static_cast<double>(a.size()), nb = static_cast<double>(b.size());
    while (i < a.size() && j < b.size()) {
        if (a[i] <= b[j])
            ++i;
        else
            ++j;
        d = std::max(d, std::fabs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
    }
    return d;
}

Moments sample_moments(std::span<const double> x) {
    std::size_t n = x.size();
    if (n < 2) throw Error(ErrorKind::InsufficientData, "need at least 2 observations");
    double mean = 0.0;
    for (double v : x) mean += v;
    mean /= static_cast<double>(n);
    double m2 = 0.0, m3 = 0.0, m4 = 0.0;
    for (double v : x) {
        double c = v - mean;
        double c2 = c * c;
        m2 += c2;
        m3 += c2 * c;
        m4 += c2 * c2;
    }
    double dn = static_cast<double>(n);
    m2 /= dn;
    m3 /= dn;
    m4 /= dn;
    Moments out;
    out.mean = mean;
    out.variance = m2 * dn / (dn - 1.0);
    if (m2 > 0.0) {
        out.skewness = m3 / std::pow(m2, 1.5);
        out.ex_kurtosis = m4 / (m2 * m2) - 3.0;
    }
    return out;
}

} // namespace copulaforge
