#pragma once

// Self-contained primal simplex with primal/dual certificates, in two
// guises: exact rational pivoting with Bland's rule (termination
// guaranteed), and double precision with Dantzig pricing plus a Bland
// fallback. The solver is the substrate for every pricing and arbitrage
// question in the library, so every terminal status carries evidence that
// can be re-checked by substitution:
//   Optimal    -> primal point, row duals, equal objectives
//   Infeasible -> row multipliers y with sum_i y_i a_i row-aggregating to
//                 an inequality no point within the variable bounds meets
//   Unbounded  -> feasible point plus improving ray
//
// Dual sign conventions (verified by verify_optimal):
//   Min: LE rows y <= 0, GE rows y >= 0, EQ free.
//   Max: mirrored.

#include "treehedge/errors.hpp"
#include "treehedge/numeric.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace treehedge::lp {

enum class Sense { Min, Max };
enum class Rel { LE, EQ, GE };
enum class Status { Optimal, Infeasible, Unbounded };

template <class R>
struct LinearProgram {
    Sense sense = Sense::Min;
    std::vector<R> objective;                 // per variable
    std::vector<std::optional<R>> lower;      // nullopt = -inf
    std::vector<std::optional<R>> upper;      // nullopt = +inf
    std::vector<std::vector<R>> rows;         // dense coefficient rows
    std::vector<Rel> rels;
    std::vector<R> rhs;

    std::size_t num_vars() const { return objective.size(); }
    std::size_t num_rows() const { return rows.size(); }

    // Free variable with zero cost by default.
    std::size_t add_var(R cost = R(0), std::optional<R> lo = std::nullopt,
                        std::optional<R> up = std::nullopt) {
        objective.push_back(std::move(cost));
        lower.push_back(std::move(lo));
        upper.push_back(std::move(up));
        return objective.size() - 1;
    }

    void add_row(const std::vector<std::pair<std::size_t, R>>& terms, Rel rel, R b) {
        std::vector<R> row(num_vars(), R(0));
        for (const auto& [j, c] : terms) {
            if (j >= num_vars()) throw DimensionError("add_row: variable out of range");
            row[j] += c;
        }
        rows.push_back(std::move(row));
        rels.push_back(rel);
        rhs.push_back(std::move(b));
    }

    void validate() const {
        const std::size_t n = num_vars();
        if (lower.size() != n || upper.size() != n)
            throw DimensionError("inconsistent bound arrays");
        if (rels.size() != rows.size() || rhs.size() != rows.size())
            throw DimensionError("inconsistent row arrays");
        for (const auto& r : rows)
            if (r.size() != n) throw DimensionError("row width mismatch");
        if constexpr (!num_traits<R>::is_exact) {
            for (const auto& c : objective)
                if (!num_traits<R>::is_finite(c)) throw DimensionError("non-finite objective");
            for (const auto& r : rows)
                for (const auto& v : r)
                    if (!num_traits<R>::is_finite(v)) throw DimensionError("non-finite coefficient");
            for (const auto& v : rhs)
                if (!num_traits<R>::is_finite(v)) throw DimensionError("non-finite rhs");
        }
        for (std::size_t j = 0; j < n; ++j)
            if (lower[j] && upper[j] && *lower[j] > *upper[j])
                throw DimensionError("crossing variable bounds");
    }
};

template <class R>
struct FarkasCertificate {
    std::vector<R> row_mult;  // one multiplier per original row
};

template <class R>
struct RayCertificate {
    std::vector<R> direction;  // improving feasible direction from `primal`
};

template <class R>
struct LPResult {
    Status status = Status::Optimal;
    R objective{};
    std::vector<R> primal;    // Optimal: optimizer; Unbounded: feasible point
    std::vector<R> row_dual;  // Optimal only
    std::optional<FarkasCertificate<R>> farkas;
    std::optional<RayCertificate<R>> ray;
};

namespace detail {

template <class R>
struct VarMap {
    // x = shift + dir*z[col] for single-column vars, x = z[col] - z[col2]
    // for free vars (col2 >= 0).
    R shift{};
    int dir = 1;
    long col = -1;
    long col2 = -1;
    long bound_row = -1;  // standard row index of z[col] <= cap, if any
};

template <class R>
class Simplex {
public:
    explicit Simplex(const LinearProgram<R>& lp) : lp_(lp) { build(); }

    LPResult<R> run() {
        LPResult<R> res;
        if (!phase1()) {
            res.status = Status::Infeasible;
            res.farkas = FarkasCertificate<R>{farkas_from_phase1()};
            return res;
        }
        purge_artificials();
        long ray_col = phase2();
        if (ray_col >= 0) {
            res.status = Status::Unbounded;
            res.primal = extract_primal();
            res.ray = RayCertificate<R>{extract_ray(static_cast<std::size_t>(ray_col))};
            res.objective = R(0);
            return res;
        }
        res.status = Status::Optimal;
        res.primal = extract_primal();
        res.row_dual = extract_duals();
        R obj(0);
        for (std::size_t j = 0; j < lp_.num_vars(); ++j) obj += lp_.objective[j] * res.primal[j];
        res.objective = obj;
        return res;
    }

private:
    const LinearProgram<R>& lp_;

    std::size_t n_struct_ = 0;   // structural z columns
    std::size_t n_cols_ = 0;     // structural + slack
    std::size_t n_total_ = 0;    // + artificials
    std::vector<VarMap<R>> vmap_;
    std::vector<std::vector<R>> T_;  // m x (n_total_+1), last col = rhs
    std::vector<long> basis_;
    std::vector<int> row_flip_;      // standard row scaling vs original orientation
    std::vector<long> row_of_orig_;  // original row -> standard row
    std::vector<long> reader_col_;   // per standard row: column reading pi
    std::vector<R> reader_coef_;
    std::vector<R> cost_;            // phase-2 cost per column (min sense)
    std::vector<R> obj_row_;         // current reduced costs (active phase)
    std::vector<bool> row_dropped_;
    std::size_t n_arts_ = 0;

    R cell(std::size_t i, std::size_t j) const { return T_[i][j]; }
    R& rhs_of(std::size_t i) { return T_[i][n_total_]; }

    static R tol() { return num_traits<R>::feas_tol(); }
    static R ptol() { return num_traits<R>::pivot_tol(); }

    void build() {
        lp_.validate();
        const std::size_t n = lp_.num_vars();
        const bool maximize = lp_.sense == Sense::Max;

        // Variable mapping to nonnegative columns.
        vmap_.resize(n);
        std::vector<R> struct_cost;
        std::vector<std::pair<std::size_t, R>> bound_caps;  // (var, cap) rows to add
        for (std::size_t j = 0; j < n; ++j) {
            R c = maximize ? R(-lp_.objective[j]) : lp_.objective[j];
            auto& vm = vmap_[j];
            if (lp_.lower[j]) {
                vm.shift = *lp_.lower[j];
                vm.dir = 1;
                vm.col = static_cast<long>(struct_cost.size());
                struct_cost.push_back(c);
                if (lp_.upper[j]) bound_caps.emplace_back(j, *lp_.upper[j] - *lp_.lower[j]);
            } else if (lp_.upper[j]) {
                vm.shift = *lp_.upper[j];
                vm.dir = -1;
                vm.col = static_cast<long>(struct_cost.size());
                struct_cost.push_back(R(-c));
            } else {
                vm.col = static_cast<long>(struct_cost.size());
                struct_cost.push_back(c);
                vm.col2 = static_cast<long>(struct_cost.size());
                struct_cost.push_back(R(-c));
            }
        }
        n_struct_ = struct_cost.size();

        // Standard rows: originals then bound caps.
        const std::size_t m = lp_.num_rows() + bound_caps.size();
        std::vector<std::vector<R>> srows(m, std::vector<R>(n_struct_, R(0)));
        std::vector<R> srhs(m, R(0));
        std::vector<Rel> srel(m, Rel::EQ);
        row_of_orig_.assign(lp_.num_rows(), -1);
        for (std::size_t i = 0; i < lp_.num_rows(); ++i) {
            row_of_orig_[i] = static_cast<long>(i);
            R b = lp_.rhs[i];
            for (std::size_t j = 0; j < n; ++j) {
                const R& a = lp_.rows[i][j];
                if (a == R(0)) continue;
                const auto& vm = vmap_[j];
                srows[i][static_cast<std::size_t>(vm.col)] += vm.col2 >= 0 ? a : R(a * R(vm.dir));
                if (vm.col2 >= 0) srows[i][static_cast<std::size_t>(vm.col2)] -= a;
                b -= a * vm.shift;
            }
            srhs[i] = b;
            srel[i] = lp_.rels[i];
        }
        for (std::size_t k = 0; k < bound_caps.size(); ++k) {
            std::size_t i = lp_.num_rows() + k;
            auto [var, cap] = bound_caps[k];
            vmap_[var].bound_row = static_cast<long>(i);
            srows[i][static_cast<std::size_t>(vmap_[var].col)] = R(1);
            srhs[i] = cap;
            srel[i] = Rel::LE;
        }

        // Orient rows so a slack can start basic where possible, add slack
        // and artificial columns, install the initial basis.
        row_flip_.assign(m, 1);
        reader_col_.assign(m, -1);
        reader_coef_.assign(m, R(1));
        basis_.assign(m, -1);
        row_dropped_.assign(m, false);
        struct SlackSpec { std::size_t row; R coef; bool start_basic; };
        std::vector<SlackSpec> slacks;
        std::vector<std::size_t> art_rows;
        for (std::size_t i = 0; i < m; ++i) {
            if (srel[i] != Rel::EQ) {
                bool le = srel[i] == Rel::LE;
                bool flip = le ? srhs[i] < R(0) : !(srhs[i] < R(0));
                if (flip) {
                    for (auto& v : srows[i]) v = -v;
                    srhs[i] = -srhs[i];
                    row_flip_[i] = -1;
                }
                // After orientation the slack coefficient is +1 exactly when
                // it can start basic (rhs >= 0 guaranteed by the flip rule
                // for one of the two cases).
                R coef = (le != flip) ? R(1) : R(-1);
                bool start = coef == R(1) && !(srhs[i] < R(0));
                slacks.push_back({i, coef, start});
                if (!start) art_rows.push_back(i);
            } else {
                if (srhs[i] < R(0)) {
                    for (auto& v : srows[i]) v = -v;
                    srhs[i] = -srhs[i];
                    row_flip_[i] = -1;
                }
                art_rows.push_back(i);
            }
        }
        n_cols_ = n_struct_ + slacks.size();
        n_arts_ = art_rows.size();
        n_total_ = n_cols_ + n_arts_;

        T_.assign(m, std::vector<R>(n_total_ + 1, R(0)));
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < n_struct_; ++j) T_[i][j] = srows[i][j];
            T_[i][n_total_] = srhs[i];
        }
        cost_.assign(n_total_, R(0));
        for (std::size_t j = 0; j < n_struct_; ++j) cost_[j] = struct_cost[j];
        for (std::size_t k = 0; k < slacks.size(); ++k) {
            std::size_t col = n_struct_ + k;
            T_[slacks[k].row][col] = slacks[k].coef;
            reader_col_[slacks[k].row] = static_cast<long>(col);
            reader_coef_[slacks[k].row] = slacks[k].coef;
            if (slacks[k].start_basic) basis_[slacks[k].row] = static_cast<long>(col);
        }
        for (std::size_t k = 0; k < art_rows.size(); ++k) {
            std::size_t col = n_cols_ + k;
            std::size_t i = art_rows[k];
            T_[i][col] = R(1);
            basis_[i] = static_cast<long>(col);
            if (reader_col_[i] < 0) {
                reader_col_[i] = static_cast<long>(col);
                reader_coef_[i] = R(1);
            }
        }
    }

    bool is_artificial(long col) const { return col >= 0 && static_cast<std::size_t>(col) >= n_cols_; }

    void pivot(std::size_t pr, std::size_t pc) {
        R piv = T_[pr][pc];
        for (auto& v : T_[pr]) v /= piv;
        for (std::size_t i = 0; i < T_.size(); ++i) {
            if (i == pr || row_dropped_[i]) continue;
            R f = T_[i][pc];
            if (f == R(0)) continue;
            auto& row = T_[i];
            const auto& prow = T_[pr];
            for (std::size_t j = 0; j <= n_total_; ++j) row[j] -= f * prow[j];
        }
        R f = obj_row_[pc];
        if (f != R(0)) {
            const auto& prow = T_[pr];
            for (std::size_t j = 0; j <= n_total_; ++j) obj_row_[j] -= f * prow[j];
        }
        basis_[pr] = static_cast<long>(pc);
    }

    // Returns -1 on optimality, else entering column; `allow` masks columns.
    long choose_entering(bool bland, std::size_t limit) const {
        long best = -1;
        R best_val(0);
        for (std::size_t j = 0; j < limit; ++j) {
            const R& r = obj_row_[j];
            if (r < -ptol()) {
                if (bland) return static_cast<long>(j);
                if (best < 0 || r < best_val) { best = static_cast<long>(j); best_val = r; }
            }
        }
        return best;
    }

    long choose_leaving(std::size_t pc) const {
        long leave = -1;
        R best_ratio(0);
        for (std::size_t i = 0; i < T_.size(); ++i) {
            if (row_dropped_[i]) continue;
            const R& a = T_[i][pc];
            if (a <= ptol()) continue;
            R ratio = T_[i][n_total_] / a;
            if (leave < 0 || ratio < best_ratio ||
                (ratio == best_ratio && basis_[i] < basis_[static_cast<std::size_t>(leave)])) {
                leave = static_cast<long>(i);
                best_ratio = ratio;
            }
        }
        return leave;
    }

    // Core loop; returns entering column if unbounded, -1 at optimality.
    long iterate(std::size_t col_limit) {
        const std::size_t max_iter = 500000;
        std::size_t degen_streak = 0;
        bool bland = num_traits<R>::is_exact;
        for (std::size_t it = 0; it < max_iter; ++it) {
            long pc = choose_entering(bland, col_limit);
            if (pc < 0) return -1;
            long pr = choose_leaving(static_cast<std::size_t>(pc));
            if (pr < 0) return pc;
            if constexpr (!num_traits<R>::is_exact) {
                // Anti-cycling safeguard: long degenerate runs switch to Bland.
                if (T_[static_cast<std::size_t>(pr)][n_total_] <= ptol()) {
                    if (++degen_streak > 2000) bland = true;
                } else {
                    degen_streak = 0;
                }
            }
            pivot(static_cast<std::size_t>(pr), static_cast<std::size_t>(pc));
        }
        throw Error("simplex iteration limit exceeded");
    }

    void load_objective(const std::vector<R>& c) {
        obj_row_.assign(n_total_ + 1, R(0));
        for (std::size_t j = 0; j < n_total_; ++j) obj_row_[j] = j < c.size() ? c[j] : R(0);
        for (std::size_t i = 0; i < T_.size(); ++i) {
            if (row_dropped_[i]) continue;
            long b = basis_[i];
            R cb = (b >= 0 && static_cast<std::size_t>(b) < c.size()) ? c[static_cast<std::size_t>(b)] : R(0);
            if (cb == R(0)) continue;
            for (std::size_t j = 0; j <= n_total_; ++j) obj_row_[j] -= cb * T_[i][j];
        }
    }

    bool phase1() {
        if (n_arts_ == 0) return true;
        std::vector<R> c1(n_total_, R(0));
        for (std::size_t j = n_cols_; j < n_total_; ++j) c1[j] = R(1);
        load_objective(c1);
        if (iterate(n_total_) >= 0) throw Error("phase-1 cannot be unbounded");
        R value(0);
        for (std::size_t i = 0; i < T_.size(); ++i)
            if (!row_dropped_[i] && is_artificial(basis_[i])) value += T_[i][n_total_];
        R scale = R(1);
        if constexpr (!num_traits<R>::is_exact) {
            for (std::size_t i = 0; i < T_.size(); ++i)
                scale = std::max(scale, abs_val(T_[i][n_total_]));
        }
        return !(value > tol() * scale);
    }

    std::vector<R> farkas_from_phase1() {
        // Phase-1 duals read off reader columns: r_col = c1_col - pi_i*coef.
        std::vector<R> y(lp_.num_rows(), R(0));
        for (std::size_t i = 0; i < lp_.num_rows(); ++i) {
            long srow = row_of_orig_[i];
            long col = reader_col_[static_cast<std::size_t>(srow)];
            R c1 = is_artificial(col) ? R(1) : R(0);
            R pi = (c1 - obj_row_[static_cast<std::size_t>(col)]) / reader_coef_[static_cast<std::size_t>(srow)];
            y[i] = R(row_flip_[static_cast<std::size_t>(srow)]) * pi;
        }
        // The certificate aggregates to sum_i y_i a_i^T x >= sum_i y_i b_i;
        // verify_farkas() re-derives the bound multipliers from the residual.
        return y;
    }

    void purge_artificials() {
        for (std::size_t i = 0; i < T_.size(); ++i) {
            if (row_dropped_[i] || !is_artificial(basis_[i])) continue;
            long pc = -1;
            for (std::size_t j = 0; j < n_cols_; ++j) {
                if (abs_val(T_[i][j]) > ptol()) { pc = static_cast<long>(j); break; }
            }
            if (pc >= 0) {
                pivot(i, static_cast<std::size_t>(pc));
            } else {
                row_dropped_[i] = true;  // redundant constraint
            }
        }
    }

    long phase2() {
        load_objective(cost_);
        return iterate(n_cols_);  // artificial columns locked out
    }

    std::vector<R> z_values() const {
        std::vector<R> z(n_total_, R(0));
        for (std::size_t i = 0; i < T_.size(); ++i)
            if (!row_dropped_[i] && basis_[i] >= 0) z[static_cast<std::size_t>(basis_[i])] = T_[i][n_total_];
        return z;
    }

    std::vector<R> extract_primal() const {
        auto z = z_values();
        std::vector<R> x(lp_.num_vars(), R(0));
        for (std::size_t j = 0; j < lp_.num_vars(); ++j) {
            const auto& vm = vmap_[j];
            if (vm.col2 >= 0) {
                x[j] = z[static_cast<std::size_t>(vm.col)] - z[static_cast<std::size_t>(vm.col2)];
            } else {
                x[j] = vm.shift + R(vm.dir) * z[static_cast<std::size_t>(vm.col)];
            }
        }
        return x;
    }

    std::vector<R> extract_ray(std::size_t pc) const {
        std::vector<R> dz(n_total_, R(0));
        dz[pc] = R(1);
        for (std::size_t i = 0; i < T_.size(); ++i) {
            if (row_dropped_[i] || basis_[i] < 0) continue;
            dz[static_cast<std::size_t>(basis_[i])] = -T_[i][pc];
        }
        std::vector<R> dx(lp_.num_vars(), R(0));
        for (std::size_t j = 0; j < lp_.num_vars(); ++j) {
            const auto& vm = vmap_[j];
            R dv = dz[static_cast<std::size_t>(vm.col)];
            if (vm.col2 >= 0) dv -= dz[static_cast<std::size_t>(vm.col2)];
            dx[j] = vm.col2 >= 0 ? dv : R(vm.dir) * dv;
        }
        return dx;
    }

    std::vector<R> extract_duals() const {
        std::vector<R> y(lp_.num_rows(), R(0));
        const bool maximize = lp_.sense == Sense::Max;
        for (std::size_t i = 0; i < lp_.num_rows(); ++i) {
            long srow = row_of_orig_[i];
            if (row_dropped_[static_cast<std::size_t>(srow)]) { y[i] = R(0); continue; }
            long col = reader_col_[static_cast<std::size_t>(srow)];
            R pi = (R(0) - obj_row_[static_cast<std::size_t>(col)]) / reader_coef_[static_cast<std::size_t>(srow)];
            y[i] = R(row_flip_[static_cast<std::size_t>(srow)]) * pi;
            if (maximize) y[i] = -y[i];
        }
        return y;
    }
};

}  // namespace detail

template <class R>
inline LPResult<R> solve(const LinearProgram<R>& lp) {
    detail::Simplex<R> s(lp);
    return s.run();
}

// ---------------------------------------------------------------------------
// Certificate verification by substitution. These functions use only the
// original program data plus the certificate, never solver internals.

template <class R>
inline bool primal_feasible(const LinearProgram<R>& lp, const std::vector<R>& x, const R& tol) {
    if (x.size() != lp.num_vars()) return false;
    for (std::size_t j = 0; j < x.size(); ++j) {
        if (lp.lower[j] && x[j] < *lp.lower[j] - tol) return false;
        if (lp.upper[j] && x[j] > *lp.upper[j] + tol) return false;
    }
    for (std::size_t i = 0; i < lp.num_rows(); ++i) {
        R ax(0);
        for (std::size_t j = 0; j < x.size(); ++j) ax += lp.rows[i][j] * x[j];
        switch (lp.rels[i]) {
            case Rel::LE: if (ax > lp.rhs[i] + tol) return false; break;
            case Rel::GE: if (ax < lp.rhs[i] - tol) return false; break;
            case Rel::EQ: if (abs_val(R(ax - lp.rhs[i])) > tol) return false; break;
        }
    }
    return true;
}

// Optimality check: primal and dual feasibility, sign conventions,
// complementary slackness, and matching objective values.
template <class R>
inline bool verify_optimal(const LinearProgram<R>& lp, const LPResult<R>& res, const R& tol) {
    if (res.status != Status::Optimal) return false;
    if (!primal_feasible(lp, res.primal, tol)) return false;
    if (res.row_dual.size() != lp.num_rows()) return false;
    const bool maximize = lp.sense == Sense::Max;

    R primal_obj(0);
    for (std::size_t j = 0; j < lp.num_vars(); ++j) primal_obj += lp.objective[j] * res.primal[j];
    if (abs_val(R(primal_obj - res.objective)) > tol) return false;

    R dual_obj(0);
    for (std::size_t i = 0; i < lp.num_rows(); ++i) {
        const R& y = res.row_dual[i];
        // Min: LE rows need y <= 0, GE rows y >= 0; Max mirrored.
        int expect = lp.rels[i] == Rel::LE ? -1 : lp.rels[i] == Rel::GE ? 1 : 0;
        if (maximize) expect = -expect;
        if (expect > 0 && y < -tol) return false;
        if (expect < 0 && y > tol) return false;
        R ax(0);
        for (std::size_t j = 0; j < lp.num_vars(); ++j) ax += lp.rows[i][j] * res.primal[j];
        if (abs_val(y) > tol && abs_val(R(ax - lp.rhs[i])) > tol) return false;  // slackness
        dual_obj += y * lp.rhs[i];
    }
    for (std::size_t j = 0; j < lp.num_vars(); ++j) {
        R red = lp.objective[j];
        for (std::size_t i = 0; i < lp.num_rows(); ++i) red -= res.row_dual[i] * lp.rows[i][j];
        // Reduced-cost sign against the active bound (Min: >0 at lower,
        // <0 at upper). Nonzero reduced cost requires the matching bound.
        int dir = maximize ? -1 : 1;
        R rd = R(dir) * red;
        if (rd > tol) {
            if (!lp.lower[j] || res.primal[j] > *lp.lower[j] + tol) return false;
            dual_obj += red * *lp.lower[j];
        } else if (rd < -tol) {
            if (!lp.upper[j] || res.primal[j] < *lp.upper[j] - tol) return false;
            dual_obj += red * *lp.upper[j];
        }
    }
    return abs_val(R(dual_obj - primal_obj)) <= tol * R(4);
}

// Farkas check: the row aggregation y^T A x >= y^T b, maximized over the
// variable box, still falls short of y^T b.
template <class R>
inline bool verify_farkas(const LinearProgram<R>& lp, const FarkasCertificate<R>& cert, const R& tol) {
    if (cert.row_mult.size() != lp.num_rows()) return false;
    for (std::size_t i = 0; i < lp.num_rows(); ++i) {
        const R& y = cert.row_mult[i];
        if (lp.rels[i] == Rel::LE && y > tol) return false;
        if (lp.rels[i] == Rel::GE && y < -tol) return false;
    }
    R lhs_sup(0), rhs(0);
    for (std::size_t i = 0; i < lp.num_rows(); ++i) rhs += cert.row_mult[i] * lp.rhs[i];
    for (std::size_t j = 0; j < lp.num_vars(); ++j) {
        R beta(0);
        for (std::size_t i = 0; i < lp.num_rows(); ++i) beta += cert.row_mult[i] * lp.rows[i][j];
        if (beta > tol) {
            if (!lp.upper[j]) return false;
            lhs_sup += beta * *lp.upper[j];
        } else if (beta < -tol) {
            if (!lp.lower[j]) return false;
            lhs_sup += beta * *lp.lower[j];
        }
    }
    // Every feasible x would satisfy beta^T x >= rhs, yet sup beta^T x < rhs.
    return lhs_sup < rhs - tol;
}

// Ray check: direction stays feasible from the given point and improves the
// objective.
template <class R>
inline bool verify_ray(const LinearProgram<R>& lp, const std::vector<R>& from,
                       const RayCertificate<R>& cert, const R& tol) {
    const auto& d = cert.direction;
    if (d.size() != lp.num_vars()) return false;
    if (!primal_feasible(lp, from, tol)) return false;
    for (std::size_t j = 0; j < d.size(); ++j) {
        if (lp.lower[j] && d[j] < -tol) return false;
        if (lp.upper[j] && d[j] > tol) return false;
    }
    for (std::size_t i = 0; i < lp.num_rows(); ++i) {
        R ad(0);
        for (std::size_t j = 0; j < d.size(); ++j) ad += lp.rows[i][j] * d[j];
        switch (lp.rels[i]) {
            case Rel::LE: if (ad > tol) return false; break;
            case Rel::GE: if (ad < -tol) return false; break;
            case Rel::EQ: if (abs_val(ad) > tol) return false; break;
        }
    }
    R cd(0);
    for (std::size_t j = 0; j < d.size(); ++j) cd += lp.objective[j] * d[j];
    return lp.sense == Sense::Min ? cd < -tol : cd > tol;
}

}  // namespace treehedge::lp
