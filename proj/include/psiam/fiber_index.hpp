#pragma once

/** Inverse image of psi on [1, bound]: v -> sorted { n <= bound : psi(n) = v }. */

#include <algorithm>
#include <numeric>
#include <span>
#include <vector>

#include "sieve.hpp"

namespace psiam {

class FiberIndex {
  public:
    /// One fiber: the common value and its preimages, ascending.
    struct Fiber {
        u64 value;
        std::span<const u64> members;
    };

    FiberIndex() = default;

    explicit FiberIndex(u64 bound, const SieveConfig &config = {}) : bound_(bound) {
        if (bound == 0)
            throw domain_error("build_fiber_index: bound must be >= 1");
        const PsiTable table = sieve_psi(1, bound + 1, config);

        std::vector<u64> order(bound);
        std::iota(order.begin(), order.end(), u64{1});
        // stable: members inside each fiber stay ascending in n
        std::stable_sort(order.begin(), order.end(),
                         [&](u64 a, u64 b) { return table(a) < table(b); });

        members_ = std::move(order);
        for (std::size_t i = 0; i < members_.size(); ++i) {
            const u64 v = table(members_[i]);
            if (values_.empty() || values_.back() != v) {
                values_.push_back(v);
                starts_.push_back(i);
            }
        }
        starts_.push_back(members_.size());
    }

    u64 bound() const { return bound_; }
    std::size_t fiber_count() const { return values_.size(); }

    /// Preimages of v; empty if v is not attained on [1, bound].
    std::span<const u64> fiber(u64 v) const {
        auto it = std::lower_bound(values_.begin(), values_.end(), v);
        if (it == values_.end() || *it != v)
            return {};
        return at(static_cast<std::size_t>(it - values_.begin())).members;
    }

    /// i-th fiber in ascending order of value.
    Fiber at(std::size_t i) const {
        return {values_[i], std::span<const u64>(members_).subspan(starts_[i], starts_[i + 1] - starts_[i])};
    }

    template <typename F> void for_each_fiber(F &&f) const {
        for (std::size_t i = 0; i < values_.size(); ++i)
            f(at(i));
    }

  private:
    u64 bound_ = 0;
    std::vector<u64> values_;        // distinct psi values, ascending
    std::vector<std::size_t> starts_; // fiber i is members_[starts_[i], starts_[i+1])
    std::vector<u64> members_;
};

inline FiberIndex build_fiber_index(u64 bound, const SieveConfig &config = {}) { return FiberIndex(bound, config); }

} // namespace psiam
