#pragma once

#include "gtp/exactmath.hpp"

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <vector>

namespace gtp {

// Incremental Gaussian elimination over Q on sparse vectors.
// Each added vector is reduced by its leading (greatest) key; a vector that
// reduces to zero yields the linear dependency among the inputs that produced it.
template <class Key, class Less = std::less<Key>>
class IncrementalEliminator {
public:
    using Vec = std::map<Key, Rational, Less>;
    using Combo = std::map<std::size_t, Rational>;

    // Returns nullopt if v is independent of the earlier inputs, otherwise the
    // coefficients c with sum c_i v_i = 0 (c_new = 1).
    std::optional<Combo> add(Vec v) {
        const std::size_t id = inputs_++;
        Combo combo{{id, Rational(1)}};
        while (!v.empty()) {
            auto lead = std::prev(v.end());
            auto pit = pivot_of_key_.find(lead->first);
            if (pit == pivot_of_key_.end()) {
                Rational inv = Rational(1) / lead->second;
                for (auto& [k, c] : v) c *= inv;
                for (auto& [k, c] : combo) c *= inv;
                pivot_of_key_.emplace(lead->first, pivots_.size());
                pivots_.push_back({std::move(v), std::move(combo)});
                return std::nullopt;
            }
            const Rational f = lead->second;
            const Pivot& p = pivots_[pit->second];
            axpy(v, -f, p.vec);
            axpy(combo, -f, p.combo);
        }
        return combo;
    }

    std::size_t rank() const { return pivots_.size(); }
    std::size_t inputs() const { return inputs_; }

private:
    struct Pivot {
        Vec vec;
        Combo combo;
    };

    template <class M>
    static void axpy(M& y, const Rational& a, const M& x) {
        for (const auto& [k, c] : x) {
            auto [it, inserted] = y.emplace(k, a * c);
            if (!inserted) {
                it->second += a * c;
                if (it->second.is_zero()) y.erase(it);
            }
        }
    }

    std::map<Key, std::size_t, Less> pivot_of_key_;
    std::vector<Pivot> pivots_;
    std::size_t inputs_ = 0;
};

// Solves the square system A x = b exactly; nullopt if singular.
std::optional<std::vector<Rational>> solve_dense(std::vector<std::vector<Rational>> a, std::vector<Rational> b);

}  // namespace gtp
