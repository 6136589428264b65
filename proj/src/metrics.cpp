#include "gsteg/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "gsteg/combinadic.hpp"
#include "gsteg/errors.hpp"

namespace gsteg {

namespace {

constexpr size_t kMaxEditDistanceBits = 1000000;

double log2_big(const BigNat& v) {
    signed long e = 0;
    const double d = mpz_get_d_2exp(&e, v.get_mpz_t());
    return double(e) + std::log2(d);
}

// Myers' bit-parallel edit distance, multi-word form. The pattern is laid
// out across 64-bit blocks; Xh's addition and the Ph/Mh shifts carry across
// block boundaries. Dead bits above the pattern top never feed back into
// live bits because carries only move upward.
size_t myers_distance(const BitString& pattern, const BitString& text) {
    const size_t m = pattern.size();
    const size_t blocks = (m + 63) / 64;
    std::vector<uint64_t> peq[2];
    peq[0].assign(blocks, 0);
    peq[1].assign(blocks, 0);
    for (size_t i = 0; i < m; ++i)
        peq[pattern.bit(i) ? 1 : 0][i / 64] |= uint64_t(1) << (i % 64);

    std::vector<uint64_t> Pv(blocks, ~uint64_t(0));
    std::vector<uint64_t> Mv(blocks, 0);
    const uint64_t top_bit = uint64_t(1) << ((m - 1) % 64);
    size_t score = m;

    for (size_t j = 0; j < text.size(); ++j) {
        const auto& eq_row = peq[text.bit(j) ? 1 : 0];
        uint64_t add_carry = 0;
        uint64_t ph_carry = 1;  // left border of the matrix contributes +1
        uint64_t mh_carry = 0;
        for (size_t b = 0; b < blocks; ++b) {
            const uint64_t Eq = eq_row[b];
            const uint64_t pv = Pv[b];
            const uint64_t mv = Mv[b];
            const uint64_t Xv = Eq | mv;

            const unsigned __int128 sum =
                (unsigned __int128)(Eq & pv) + pv + add_carry;
            add_carry = static_cast<uint64_t>(sum >> 64);
            const uint64_t Xh = (static_cast<uint64_t>(sum) ^ pv) | Eq;

            const uint64_t Ph = mv | ~(Xh | pv);
            const uint64_t Mh = pv & Xh;
            if (b == blocks - 1) {
                if (Ph & top_bit) ++score;
                else if (Mh & top_bit) --score;
            }

            const uint64_t ph_shift = (Ph << 1) | ph_carry;
            const uint64_t mh_shift = (Mh << 1) | mh_carry;
            ph_carry = Ph >> 63;
            mh_carry = Mh >> 63;
            Pv[b] = mh_shift | ~(Xv | ph_shift);
            Mv[b] = ph_shift & Xv;
        }
    }
    return score;
}

}  // namespace

double bpp(uint64_t total_bits, uint32_t width, uint32_t height, uint32_t channels) {
    const uint64_t pixels = uint64_t(width) * height * channels;
    if (pixels == 0) throw std::domain_error("bpp: image has zero size");
    return double(total_bits) / double(pixels);
}

size_t levenshtein(const BitString& a, const BitString& b) {
    if (a.size() > kMaxEditDistanceBits || b.size() > kMaxEditDistanceBits)
        throw std::length_error("levenshtein: streams beyond 10^6 bits are not supported");
    if (a.empty()) return b.size();
    if (b.empty()) return a.size();
    if (a == b) return 0;
    return a.size() <= b.size() ? myers_distance(a, b) : myers_distance(b, a);
}

double ie_accuracy(const BitString& a, const BitString& b) {
    if (a.empty() && b.empty()) return 1.0;
    const size_t longest = std::max(a.size(), b.size());
    return 1.0 - double(levenshtein(a, b)) / double(longest);
}

std::string CapacityReport::to_kv() const {
    std::ostringstream os;
    os.precision(12);
    os << "scheme=" << scheme_name(scheme) << "\n"
       << "K=" << group_count << "\n"
       << "n=" << per_group << "\n"
       << "latent_dim=" << latent_dim << "\n"
       << "capacity_bits=" << exact_bits << "\n"
       << "sum_log2_omega=" << sum_log2_omega << "\n"
       << "stirling_estimate=" << stirling_estimate << "\n"
       << "bpp=" << bits_per_pixel << "\n";
    return os.str();
}

CapacityReport capacity_report(const StegParams& params) {
    params.validate_structure();
    const uint32_t K = params.group_count;
    const uint32_t n = params.per_group;

    CapacityReport report;
    report.scheme = params.scheme;
    report.group_count = K;
    report.per_group = n;
    report.latent_dim = params.latent_dim;
    report.exact_bits = capacity_bits(params);

    if (params.scheme == Scheme::S2IRT) {
        const uint64_t N = uint64_t(K) * n;
        double sum = 0.0;
        for (uint32_t i = 1; i <= K - 1; ++i)
            sum += log2_big(binomial(N - uint64_t(i - 1) * n, n));
        report.sum_log2_omega = sum;
        report.stirling_estimate = -(K - 1.0) * std::log2(std::sqrt(2.0 * M_PI)) +
                                   (double(N) + 0.5) * std::log2(double(K)) -
                                   0.5 * (K - 1.0) * std::log2(double(n));
        report.lower_slack = K - 1.0;
    } else {
        double sum = 0.0;
        for (uint32_t i = 1; i <= K - 1; ++i) sum += std::log2(double(K - i + 1));
        report.sum_log2_omega = double(n) * sum;
        report.stirling_estimate =
            double(n) * (0.5 * std::log2(2.0 * M_PI * K) +
                         double(K) * (std::log2(double(K)) - std::log2(std::exp(1.0))));
        report.lower_slack = double(n) * (K - 1.0);
    }
    report.bits_per_pixel = double(report.exact_bits) / double(params.latent_dim);
    return report;
}

std::string CrackProbability::to_string() const {
    std::ostringstream os;
    os.precision(6);
    os << mantissa << "e" << exponent10;
    return os.str();
}

CrackProbability crack_probability(const StegParams& params) {
    params.validate_structure();
    const uint32_t K = params.group_count;
    const uint32_t n = params.per_group;

    // prod of the per-group choice counts collapses to a factorial form:
    //   s2irt: (Kn)! / (n!)^K          se: (K!)^n
    BigNat denom;
    if (params.scheme == Scheme::S2IRT) {
        BigNat nfac, pow_nfac;
        mpz_fac_ui(denom.get_mpz_t(), uint64_t(K) * n);
        mpz_fac_ui(nfac.get_mpz_t(), n);
        mpz_pow_ui(pow_nfac.get_mpz_t(), nfac.get_mpz_t(), K);
        mpz_divexact(denom.get_mpz_t(), denom.get_mpz_t(), pow_nfac.get_mpz_t());
    } else {
        BigNat kfac;
        mpz_fac_ui(kfac.get_mpz_t(), K);
        mpz_pow_ui(denom.get_mpz_t(), kfac.get_mpz_t(), n);
    }

    const double log10_denom = log2_big(denom) * std::log10(2.0);
    CrackProbability out;
    // P = 1/denom = mantissa * 10^{-E} with mantissa in [0.1, 1). The
    // mantissa comes from an exact rational, so small denominators (e.g. 2)
    // report exactly.
    int64_t E = static_cast<int64_t>(std::floor(log10_denom));
    if (E < 0) E = 0;
    BigNat scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(E));
    mpq_class frac(scale, denom);
    frac.canonicalize();
    double mant = frac.get_d();
    while (mant >= 1.0) {
        mant /= 10.0;
        --E;
    }
    while (mant < 0.1) {
        mant *= 10.0;
        ++E;
    }
    out.mantissa = mant;
    out.exponent10 = -E;
    return out;
}

}  // namespace gsteg
