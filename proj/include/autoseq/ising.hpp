#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "autoseq/opacity.hpp"
#include "autoseq/rational.hpp"

namespace autoseq {

// alpha = 2H/J as an exact fraction p/q (q > 0, p >= 0)
struct Alpha {
    long long p = 0, q = 1;
    static Alpha of(long long p, long long q);
    static Alpha parse(const std::string& text);  // "p/q" or a decimal like "0.35"
    Rational rational() const { return Rational(p, q); }
    double value() const { return double(p) / double(q); }
    long long m() const;  // floor(4/alpha); alpha must be > 0
    std::string str() const;
};

struct ChainSpec {
    std::vector<int> eps;  // length N
    double J = 1.0, H = 0.0;
    std::size_t N() const { return eps.size(); }
    double alpha() const { return 2.0 * H / J; }
};

double hamiltonian(const ChainSpec& spec, const std::vector<int>& sigma);

struct GroundStates {
    double energy = 0;
    std::vector<std::vector<int>> configs;
    std::size_t count() const { return configs.size(); }
};
GroundStates ground_states(const ChainSpec& spec);  // N <= 20

// log Z, log Z+, log Z- (conditioned on the last spin)
struct Partition {
    double log_z = 0, log_plus = 0, log_minus = 0;
};
Partition partition(const ChainSpec& spec, double beta);         // transfer matrix
Partition partition_direct(const ChainSpec& spec, double beta);  // 2^{N+1} sum, N <= 20

struct DegreeTrace {
    std::vector<Rational> a, b;
    Rational delta(std::size_t q) const { return a[q] - b[q]; }
};
DegreeTrace degree_recursion(const std::vector<int>& eps, const Rational& alpha, const Rational& a0,
                             const Rational& b0, std::size_t n);

// delta_0..delta_n, stored as delta * alpha.q
struct FieldTrace {
    Alpha alpha;
    std::vector<long long> scaled;
    std::size_t size() const { return scaled.size(); }
    Rational delta(std::size_t i) const { return Rational(scaled[i], alpha.q); }
    double value(std::size_t i) const { return double(scaled[i]) / double(alpha.q); }
};
// default delta_0 = alpha + 2; delta_0 * q must be an integer
FieldTrace induced_field(const std::vector<int>& eps, const Alpha& alpha, std::size_t n,
                         std::optional<Rational> delta0 = std::nullopt);
// floating version, sgn snapped to 0 below 1e-12
std::vector<double> induced_field_real(const std::vector<int>& eps, double alpha, std::size_t n, double delta0);

// alpha = 0 gives the Thue-Morse automaton with outputs 2, -2
SignedAutomaton ising_automaton(const Alpha& alpha);

std::vector<int> random_signs(std::size_t n, std::uint64_t seed);  // mt19937_64

struct ErgodicResult {
    std::vector<double> running;  // running[i] = mean of delta_0..delta_i
    double average = 0;
};
ErgodicResult ergodic_average(const std::vector<int>& eps, const Alpha& alpha, std::size_t N);

struct ScheduleParams {
    double growth = 8.0;          // block length ratio
    std::size_t first_block = 2000;
    std::size_t blocks = 7;
    long long q = 200;            // (--)^q loops per unit
    std::size_t measure_from = 4; // blocks before this are burn-in
};
struct ScheduleResult {
    double liminf = 0, limsup = 0;
    double mean_hi = 0, mean_lo = 0;
    std::uint64_t steps = 0;
    std::vector<double> block_end_average;
};
// Loops +^p - (--)^q - + from state A with p chosen per block so that the
// running average oscillates between beta and beta_prime.
ScheduleResult two_ratio_schedule(const Alpha& alpha, double beta, double beta_prime,
                                  const ScheduleParams& params = {});

double ising_opacity(const Alpha& alpha);

}  // namespace autoseq
