#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "autoseq/rational.hpp"
#include "autoseq/sequence.hpp"

namespace autoseq {

using Values = std::vector<Complex>;

// A frequency; exact p/q when den > 0, otherwise a plain real.
struct Frequency {
    double value = 0;
    std::int64_t num = 0, den = 0;

    bool exact() const { return den > 0; }
    static Frequency ratio(std::int64_t p, std::int64_t q);
    static Frequency real(double x);
    static Frequency parse(const std::string& text);  // "p/q" or decimal
    Frequency plus_one() const;
    std::string str() const;
};

Complex fourier_bohr(const Values& f, const Frequency& lambda, std::size_t N);
double seminorm(const Values& f, std::size_t N);
Complex correlation(const Values& f, std::size_t h, std::size_t N);  // needs N + h values
// gamma(0..H-1) on N terms through one FFT
std::vector<Complex> correlations(const Values& f, std::size_t H, std::size_t N);

Rational tm_correlation_exact(std::uint64_t h);

Complex paperfolding_fourier_exact(std::int64_t a, unsigned l);  // at (2a+1)/2^l
Rational paperfolding_mass(unsigned l);                          // each such frequency
Rational paperfolding_parseval_exact();                          // sum of all masses
Rational paperfolding_wiener_exact();                            // sum of squared masses

double wiener_average(const Values& f, std::size_t N, std::size_t H);

struct SupNorm {
    double value = 0;
    double theta = 0;
    double sqrt_n = 0;  // trivial lower bound
};
SupNorm sup_norm_M(const Values& a, std::size_t N, std::size_t grid);
double trig_poly_abs(const Values& a, std::size_t N, double theta);

struct BesselReport {
    double coefficient_sum = 0;  // sum |f^(lambda)|^2
    double norm_sq = 0;
    double gap = 0;
};
BesselReport bessel_report(const Values& f, const std::vector<Frequency>& lambdas, std::size_t N);

}  // namespace autoseq
