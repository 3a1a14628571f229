#pragma once

// Exhaustive and seeded-random verification sweeps. Each returns a report
// with the number of checks made, the number that failed, and the first
// (smallest, in sweep order) counterexample.

#include <cstdint>
#include <string>

namespace skein {

struct SweepReport {
  std::string name;
  std::uint64_t checked = 0;
  std::uint64_t failures = 0;
  std::string counterexample;
  double seconds = 0.0;

  bool passed() const { return failures == 0 && checked > 0; }
};

/// Phi(fg_product(a,b)) == qt_mul(Phi(a), Phi(b)) for all pairs of labels
/// (p,q),(r,s) in {-box..box}^2. `jobs` > 1 splits the sweep over threads; the
/// report is identical to the single-threaded one.
SweepReport oracle_sweep(std::int64_t box, unsigned jobs = 1);

/// (ab)c == a(bc) on `samples` seeded random label triples from the box.
SweepReport associativity_sweep(std::size_t samples, std::int64_t box, std::uint64_t seed);

/// chebyshev_T(n, gamma) == make_curve(n gamma) for coprime gamma in the box
/// and n <= max_n.
SweepReport chebyshev_sweep(std::int64_t box, std::int64_t max_n);

/// t_to_jw(n) against the commuting-variable polynomial model for n <= max_n,
/// including T_n = S_n - S_{n-2}.
SweepReport jones_wenzl_sweep(std::int64_t max_n);

/// closure_check(N) has exactly the four parity classes and agrees with
/// ab_reduce_label, for every N in [min_box, max_box].
SweepReport closure_sweep(std::int64_t min_box, std::int64_t max_box);

/// Every ab_certificate in the box replays and telescopes to input - canonical.
SweepReport ab_certificate_sweep(std::int64_t box);

/// Every coprime triple in the box reduces to its parity class with a
/// certificate that replays.
SweepReport reduction_sweep(std::int64_t box);

/// generators9 / grade_decompose structure.
SweepReport generators_check();

/// find_diffeo post-conditions on the seven parity curves and `samples` seeded
/// random coprime triples.
SweepReport diffeo_sweep(std::size_t samples, std::uint64_t seed);

/// common_curve on the worked example {z=0} vs {x+2y+3z=0} and on `samples`
/// seeded random pairs of distinct standard embeddings.
SweepReport intersection_sweep(std::size_t samples, std::uint64_t seed);

/// Quotient well-definedness: ab_reduce(commutator(x,y)) == 0 and
/// ab_reduce(xy) == ab_reduce(yx) for all label pairs in the box.
SweepReport quotient_sweep(std::int64_t box);

}  // namespace skein
