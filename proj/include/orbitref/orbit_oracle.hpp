#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "orbitref/matrix.hpp"

namespace orbitref {

/// Distinct powers T^0, T^1, ... of a finite-field matrix up to the first repeat.
struct OrbitSet {
    Matrix base;
    std::vector<Matrix> powers;
    std::size_t tail_length = 0;   // powers before the cycle starts
    std::size_t cycle_length = 0;
};

OrbitSet power_orbit(const Matrix& t);

struct OracleBudget {
    std::uint64_t vectors = 1'000'000;        // q^d
    std::uint64_t candidates = 1ull << 24;    // q^(d^2)
};

struct ContainsResult {
    bool contains = false;
    std::optional<Vector> failing_vector;
};

/// Exact test of S in F-OrbRef_0(T): S x in {lambda T^k x} for every x in GF(q)^d.
/// Throws BudgetExceeded when q^d exceeds the vector budget.
ContainsResult orbref0_contains(const Matrix& t, const Matrix& s, const OracleBudget& budget = {});

struct RigidityResult {
    bool checked = false;  // only run for nilpotent T
    bool holds = true;
    std::string counterexample;
};

struct EnumerationSummary {
    std::uint64_t q = 0;
    std::size_t dim = 0;
    std::uint64_t candidates = 0;
    std::uint64_t orbref0_size = 0;
    std::uint64_t f_orb_size = 0;
    bool equal = false;
    /// Members of OrbRef_0 outside F-Orb, ascending by candidate code.
    std::vector<Matrix> difference;
    /// First member (if any) that does not commute with T.
    std::optional<Matrix> non_commuting_member;
    RigidityResult rigidity;
};

struct EnumerationResult {
    std::vector<Matrix> members;  // ascending by candidate code
    std::vector<Matrix> f_orb;    // ascending by candidate code
    EnumerationSummary summary;
};

/// All of F-OrbRef_0(T) by a flat scan of the q^(d^2) candidates, split into a
/// fixed set of chunks; `workers` threads share the chunks. Output is
/// independent of the worker count.
EnumerationResult enumerate_orbref0(const Matrix& t, const OracleBudget& budget = {}, unsigned workers = 1);

/// Running minima of the distance from S x to the complex line spanned by T^n x,
/// for n = 0..horizon (element n is the minimum over 0..n).
std::vector<double> c_orbit_membership_residual(const Matrix& t, const Matrix& s,
                                                const std::vector<std::complex<double>>& x, std::size_t horizon);

}  // namespace orbitref
