#include "stirling/analytic.hpp"

#include "stirling/series.hpp"

namespace stirling {

namespace {

Real ldexp_real(long value, long shift, int bits) {
    Real out(value, bits);
    if (shift >= 0)
        mpf_mul_2exp(out.get_mpf_t(), out.get_mpf_t(), static_cast<unsigned long>(shift));
    else
        mpf_div_2exp(out.get_mpf_t(), out.get_mpf_t(), static_cast<unsigned long>(-shift));
    return out;
}

// e^w - 1 without cancellation for small |w|.
Real expm1_real(const Real& w, int bits) {
    Real thr = ldexp_real(1, -26, bits);
    if (abs_real(w) >= thr) {
        Real out(0, bits);
        out = exp_real(w, bits) - 1;
        return out;
    }
    Real term(0, bits), sum(0, bits);
    term = w;
    sum = w;
    Real eps(0, bits);
    eps = abs_real(w);
    mpf_div_2exp(eps.get_mpf_t(), eps.get_mpf_t(), static_cast<unsigned long>(bits) + 8);
    for (unsigned long i = 2; i < 1000; ++i) {
        term = term * w / i;
        sum += term;
        if (abs_real(term) < eps) break;
    }
    return sum;
}

void require_domain(const Real& x) {
    if (x <= -1) throw std::domain_error("argument must be > -1");
}

struct FParts {
    Real x;            // f(v)
    Real one_plus_x;   // 1 + f(v), formed without cancellation
};

// Monotone-branch Newton for g(x) = v^2, x > 0. Bracket (0, max(4v^2, 4)].
Real solve_positive_branch(const Real& v, const PrecisionContext& ctx, int bits) {
    Real v2(0, bits);
    v2 = v * v;
    Real lo(0, bits);
    Real hi(0, bits);
    hi = 4 * v2;
    if (hi < 4) hi = Real(4, bits);

    Real x(0, bits);
    x = const_sqrt2(bits) * v + 2 * v2 / 3;  // inverse-series seed
    if (x >= hi) x = (lo + hi) / 2;

    Real step_tol = ldexp_real(1, -(bits - 16), bits);
    Real h(0, bits), dx(0, bits), next(0, bits);
    for (int iter = 0; iter < 300; ++iter) {
        h = g_eval(x, ctx) - v2;
        if (sign_of(h) == 0) return x;
        if (h > 0) hi = x; else lo = x;
        dx = -h * (1 + x) / x;
        next = x + dx;
        if (next <= lo || next >= hi) {
            next = (lo + hi) / 2;
            dx = next - x;
        }
        x = next;
        if (abs_real(dx) <= x * step_tol) return x;
    }
    throw std::runtime_error("f_of_v: positive-branch Newton did not converge");
}

// Negative branch, solved in w = ln(1+x): e^w - 1 - w = v^2, w < 0.
// phi(w) = e^w - 1 - w - v^2 is strictly decreasing; bracket [-1.2-v^2, -v^2].
FParts solve_negative_branch(const Real& v, const PrecisionContext& ctx, int bits) {
    (void)ctx;
    Real v2(0, bits);
    v2 = v * v;
    Real lo(0, bits), hi(0, bits);
    lo = -v2 - Real(1.2, bits);
    hi = -v2;

    Real w(0, bits);
    if (v > -1.5) {
        Real fs(0, bits);
        fs = const_sqrt2(bits) * v + 2 * v2 / 3;  // 1 + fs > 0 for every real v
        w = ln_real(1 + fs, bits);
    } else {
        w = -1 - v2;
    }
    if (w <= lo || w >= hi) w = (lo + hi) / 2;

    Real step_tol = ldexp_real(1, -(bits - 16), bits);
    Real ew(0, bits), phi(0, bits), dw(0, bits), next(0, bits);
    for (int iter = 0; iter < 300; ++iter) {
        ew = exp_real(w, bits);
        phi = ew - 1 - w - v2;
        if (sign_of(phi) == 0) break;
        if (phi > 0) lo = w; else hi = w;
        dw = -phi / (ew - 1);
        next = w + dw;
        if (next <= lo || next >= hi) {
            next = (lo + hi) / 2;
            dw = next - w;
        }
        w = next;
        if (abs_real(dw) <= (abs_real(w) + 1) * step_tol) break;
        if (iter == 299) throw std::runtime_error("f_of_v: negative-branch Newton did not converge");
    }
    FParts parts{make_real(bits), make_real(bits)};
    parts.one_plus_x = exp_real(w, bits);
    parts.x = expm1_real(w, bits);
    return parts;
}

FParts f_parts(const Real& v, const PrecisionContext& ctx) {
    const int bits = working_bits(ctx);
    const int s = sign_of(v);
    if (s == 0) return FParts{make_real(bits), Real(1, bits)};
    if (s > 0) {
        Real x = solve_positive_branch(v, ctx, bits);
        Real opx(0, bits);
        opx = 1 + x;
        return FParts{x, opx};
    }
    return solve_negative_branch(v, ctx, bits);
}

}  // namespace

Real g_eval(const Real& x, const PrecisionContext& ctx) {
    require_domain(x);
    const int bits = working_bits(ctx);
    Real thr = ldexp_real(1, -26, bits);
    if (abs_real(x) < thr) {
        // x^2/2 - x^3/3 + x^4/4 - ...
        Real p(0, bits), sum(0, bits), add(0, bits), eps(0, bits);
        p = x * x;
        sum = p / 2;
        eps = p;
        mpf_div_2exp(eps.get_mpf_t(), eps.get_mpf_t(), static_cast<unsigned long>(bits) + 8);
        for (unsigned long i = 3; i < 10000; ++i) {
            p = p * x;
            add = p / i;
            if (i % 2 == 1) sum -= add; else sum += add;
            if (abs_real(add) < eps) break;
        }
        return sum;
    }
    Real out(0, bits);
    out = x - ln_real(1 + x, bits);
    return out;
}

Real G_eval(const Real& x, const PrecisionContext& ctx) {
    require_domain(x);
    const int bits = working_bits(ctx);
    Real thr(0, bits);
    thr = Real(1, bits) / 1000;
    if (abs_real(x) < thr) {
        // 1/2 - x/3 + x^2/4 - ... = sum_i (-x)^i / (i+2)
        Real p(1, bits), sum(0, bits), add(0, bits);
        sum = Real(1, bits) / 2;
        Real eps = ldexp_real(1, -(bits + 8), bits);
        for (unsigned long i = 1; i < 10000; ++i) {
            p = p * -x;
            add = p / (i + 2);
            sum += add;
            if (abs_real(add) < eps) break;
        }
        return sum;
    }
    Real out(0, bits);
    out = g_eval(x, ctx) / (x * x);
    return out;
}

Real v_of_x(const Real& x, const PrecisionContext& ctx) {
    const int bits = working_bits(ctx);
    Real root = sqrt_pos(g_eval(x, ctx), bits);
    if (sign_of(x) < 0) root = -root;
    return root;
}

Real f_of_v(const Real& v, const PrecisionContext& ctx) { return f_parts(v, ctx).x; }

Real y_of_v(const Real& v, const PrecisionContext& ctx) {
    const int bits = working_bits(ctx);
    if (sign_of(v) == 0) {
        Real out(0, bits);
        mpf_div_2exp(out.get_mpf_t(), const_sqrt2(bits).get_mpf_t(), 1);
        return out;
    }
    Real thr(0, bits);
    thr = Real(1, bits) / 1000;
    if (abs_real(v) < thr) return maclaurin_eval(shared_coefficients(8), v, 8, ctx);
    Real out(0, bits);
    out = v / f_of_v(v, ctx);
    return out;
}

Real fixed_point_residual(const Real& v, const PrecisionContext& ctx) {
    const int bits = working_bits(ctx);
    Real y = y_of_v(v, ctx);
    Real arg(0, bits);
    arg = v / y;
    Real rhs = sqrt_pos(G_eval(arg, ctx), bits);
    Real out(0, bits);
    out = y - rhs;
    return abs_real(out);
}

Real implicit_derivative(const Real& v, const PrecisionContext& ctx) {
    const int bits = working_bits(ctx);
    FParts parts = f_parts(v, ctx);
    Real y = y_of_v(v, ctx);
    Real out(0, bits);
    out = Real(1, bits) / (2 * parts.one_plus_x * y * y);
    return out;
}

BoundWitness bound_constant_search(const GridSpec& spec, const PrecisionContext& ctx) {
    if (spec.step <= 0) throw std::invalid_argument("bound_constant_search: step must be > 0");
    if (spec.hi < spec.lo) throw std::invalid_argument("bound_constant_search: empty grid");
    BigRat span = spec.hi - spec.lo;
    if (span / spec.step > 10000000) throw std::invalid_argument("bound_constant_search: grid too fine");

    const int bits = working_bits(ctx);
    BoundWitness witness{make_real(bits), {}, make_real(bits), 0};
    for (BigRat vq = spec.lo; vq <= spec.hi; vq += spec.step) {
        Real v = to_real(vq, bits);
        Real y = y_of_v(v, ctx);
        Real ratio(0, bits);
        ratio = y / (abs_real(v) + 1);
        witness.grid.push_back(v);
        if (witness.grid.size() == 1 || ratio > witness.max_ratio) {
            witness.max_ratio = ratio;
            witness.argmax = witness.grid.size() - 1;
        }
    }
    witness.C = witness.max_ratio;
    return witness;
}

Real modulus_omega(const Real& r, int grid_density, const PrecisionContext& ctx) {
    if (sign_of(r) <= 0) throw std::invalid_argument("modulus_omega: r must be > 0");
    if (grid_density < 1) throw std::invalid_argument("modulus_omega: grid_density must be >= 1");
    const int bits = working_bits(ctx);
    Real y0 = y_of_v(make_real(bits), ctx);
    Real best(0, bits), v(0, bits), diff(0, bits);
    for (int i = 0; i <= grid_density; ++i) {
        v = -r + (2 * r * i) / grid_density;
        diff = y_of_v(v, ctx) - y0;
        diff = abs_real(diff);
        if (diff > best) best = diff;
    }
    return best;
}

}  // namespace stirling
