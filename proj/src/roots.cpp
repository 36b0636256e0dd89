#include "endoscope/roots.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <complex>

#include "endoscope/error.hpp"

namespace endoscope {

ComplexBall ComplexEnclosure::ball() const
{
    return {Ball(re_mid, radius), Ball(im_mid, radius)};
}

namespace {

/* Plain round-to-nearest complex arithmetic for the iteration phase. */
struct CFloat {
    BigFloat re, im;
    explicit CFloat(mpfr_prec_t prec) : re(prec), im(prec) {}
};

class Workspace {
   public:
    explicit Workspace(mpfr_prec_t prec) : prec_(prec), t1_(prec), t2_(prec), t3_(prec) {}

    void mul(CFloat& r, const CFloat& a, const CFloat& b)
    {
        mpfr_mul(t1_.get(), a.re.get(), b.re.get(), MPFR_RNDN);
        mpfr_mul(t2_.get(), a.im.get(), b.im.get(), MPFR_RNDN);
        mpfr_mul(t3_.get(), a.re.get(), b.im.get(), MPFR_RNDN);
        mpfr_fma(r.im.get(), a.im.get(), b.re.get(), t3_.get(), MPFR_RNDN);
        mpfr_sub(r.re.get(), t1_.get(), t2_.get(), MPFR_RNDN);
    }

    void div(CFloat& r, const CFloat& a, const CFloat& b)
    {
        BigFloat den(prec_), re(prec_), im(prec_);
        mpfr_sqr(den.get(), b.re.get(), MPFR_RNDN);
        mpfr_fma(den.get(), b.im.get(), b.im.get(), den.get(), MPFR_RNDN);
        mpfr_mul(t1_.get(), a.re.get(), b.re.get(), MPFR_RNDN);
        mpfr_fma(re.get(), a.im.get(), b.im.get(), t1_.get(), MPFR_RNDN);
        mpfr_mul(t1_.get(), a.re.get(), b.im.get(), MPFR_RNDN);
        mpfr_fms(im.get(), a.im.get(), b.re.get(), t1_.get(), MPFR_RNDN);
        mpfr_div(r.re.get(), re.get(), den.get(), MPFR_RNDN);
        mpfr_div(r.im.get(), im.get(), den.get(), MPFR_RNDN);
    }

    static void add(CFloat& r, const CFloat& a, const CFloat& b)
    {
        mpfr_add(r.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
        mpfr_add(r.im.get(), a.im.get(), b.im.get(), MPFR_RNDN);
    }

    static void sub(CFloat& r, const CFloat& a, const CFloat& b)
    {
        mpfr_sub(r.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
        mpfr_sub(r.im.get(), a.im.get(), b.im.get(), MPFR_RNDN);
    }

    void abs(BigFloat& r, const CFloat& a) { mpfr_hypot(r.get(), a.re.get(), a.im.get(), MPFR_RNDN); }

   private:
    mpfr_prec_t prec_;
    BigFloat t1_, t2_, t3_;
};

std::vector<std::complex<double>> double_seeds(const RationalPoly& p)
{
    int n = p.degree();
    Eigen::MatrixXd c = Eigen::MatrixXd::Zero(n, n);
    const Rational& lc = p.leading();
    for (int i = 1; i < n; ++i) c(i, i - 1) = 1.0;
    for (int i = 0; i < n; ++i) {
        Rational v = p.coeff(static_cast<std::size_t>(i)) / lc;
        c(i, n - 1) = -v.get_d();
    }
    Eigen::EigenSolver<Eigen::MatrixXd> es(c, false);
    std::vector<std::complex<double>> seeds;
    if (es.info() == Eigen::Success) {
        for (int i = 0; i < n; ++i) seeds.push_back(es.eigenvalues()(i));
    }
    bool usable = static_cast<int>(seeds.size()) == n;
    for (const auto& s : seeds) usable = usable && std::isfinite(s.real()) && std::isfinite(s.imag());
    if (!usable) {
        // fall back to points on a circle
        seeds.clear();
        for (int i = 0; i < n; ++i) seeds.push_back(std::polar(1.0, 0.4 + 2.0 * M_PI * i / n));
    }
    // Aberth needs pairwise distinct starting points
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j)
            if (std::abs(seeds[static_cast<std::size_t>(i)] - seeds[static_cast<std::size_t>(j)]) < 1e-12)
                seeds[static_cast<std::size_t>(i)] += std::polar(1e-6 * (1 + i), 0.3 * i + 0.1);
    return seeds;
}

void aberth(const RationalPoly& p, std::vector<CFloat>& z, mpfr_prec_t prec)
{
    std::size_t n = z.size();
    std::vector<BigFloat> coeffs;
    for (const auto& c : p.coeffs()) coeffs.push_back(BigFloat::from_rational(c, prec));
    Workspace ws(prec);
    CFloat val(prec), der(prec), tmp(prec), sum(prec), ratio(prec), w(prec), one(prec);
    mpfr_set_ui(one.re.get(), 1, MPFR_RNDN);
    BigFloat step(prec), size(prec), tol(prec);
    int stable = 0;
    for (int iter = 0; iter < 400 && stable < 2; ++iter) {
        bool small = true;
        for (std::size_t i = 0; i < n; ++i) {
            // Horner for p and p'
            mpfr_set(val.re.get(), coeffs.back().get(), MPFR_RNDN);
            mpfr_set_zero(val.im.get(), 1);
            mpfr_set_zero(der.re.get(), 1);
            mpfr_set_zero(der.im.get(), 1);
            for (std::size_t k = coeffs.size() - 1; k-- > 0;) {
                ws.mul(tmp, der, z[i]);
                Workspace::add(der, tmp, val);
                ws.mul(tmp, val, z[i]);
                mpfr_add(val.re.get(), tmp.re.get(), coeffs[k].get(), MPFR_RNDN);
                mpfr_set(val.im.get(), tmp.im.get(), MPFR_RNDN);
            }
            if (val.re.is_zero() && val.im.is_zero()) continue;
            mpfr_set_zero(sum.re.get(), 1);
            mpfr_set_zero(sum.im.get(), 1);
            for (std::size_t j = 0; j < n; ++j) {
                if (j == i) continue;
                Workspace::sub(tmp, z[i], z[j]);
                if (tmp.re.is_zero() && tmp.im.is_zero()) continue;
                ws.div(tmp, one, tmp);
                Workspace::add(sum, sum, tmp);
            }
            if (der.re.is_zero() && der.im.is_zero()) {
                mpfr_set_d(w.re.get(), 1e-3, MPFR_RNDN);
                mpfr_set_d(w.im.get(), 1e-3, MPFR_RNDN);
            } else {
                ws.div(ratio, val, der);
                ws.mul(tmp, ratio, sum);
                Workspace::sub(tmp, one, tmp);
                if (tmp.re.is_zero() && tmp.im.is_zero())
                    w = ratio;
                else
                    ws.div(w, ratio, tmp);
            }
            Workspace::sub(z[i], z[i], w);
            ws.abs(step, w);
            ws.abs(size, z[i]);
            if (mpfr_cmp_ui(size.get(), 1) < 0) mpfr_set_ui(size.get(), 1, MPFR_RNDN);
            mpfr_mul_2si(tol.get(), size.get(), -static_cast<long>(prec) + 4, MPFR_RNDN);
            if (mpfr_greater_p(step.get(), tol.get())) small = false;
        }
        stable = small ? stable + 1 : 0;
    }
}

/* Snap near-real roots onto the axis and make conjugate pairs exact. */
void symmetrize(std::vector<CFloat>& z, mpfr_prec_t prec)
{
    BigFloat thr(prec), size(prec), t(prec);
    for (auto& r : z) {
        mpfr_hypot(size.get(), r.re.get(), r.im.get(), MPFR_RNDN);
        if (mpfr_cmp_ui(size.get(), 1) < 0) mpfr_set_ui(size.get(), 1, MPFR_RNDN);
        mpfr_mul_2si(thr.get(), size.get(), -static_cast<long>(prec) / 2, MPFR_RNDN);
        mpfr_abs(t.get(), r.im.get(), MPFR_RNDN);
        if (mpfr_lessequal_p(t.get(), thr.get())) mpfr_set_zero(r.im.get(), 1);
    }
    std::vector<bool> used(z.size(), false);
    for (std::size_t i = 0; i < z.size(); ++i) {
        if (z[i].im.sign() <= 0) continue;
        std::size_t best = z.size();
        BigFloat best_d(prec), d(prec), dr(prec), di(prec);
        for (std::size_t j = 0; j < z.size(); ++j) {
            if (used[j] || z[j].im.sign() >= 0) continue;
            mpfr_sub(dr.get(), z[i].re.get(), z[j].re.get(), MPFR_RNDN);
            mpfr_add(di.get(), z[i].im.get(), z[j].im.get(), MPFR_RNDN);
            mpfr_hypot(d.get(), dr.get(), di.get(), MPFR_RNDN);
            if (best == z.size() || mpfr_less_p(d.get(), best_d.get())) {
                best = j;
                best_d = d;
            }
        }
        if (best == z.size()) continue;
        used[best] = true;
        mpfr_set(z[best].re.get(), z[i].re.get(), MPFR_RNDN);
        mpfr_neg(z[best].im.get(), z[i].im.get(), MPFR_RNDN);
    }
}

BigFloat upper_abs(const ComplexBall& b)
{
    BigFloat r(radius_precision), t(radius_precision);
    BigFloat re = b.re().mag(), im = b.im().mag();
    mpfr_sqr(r.get(), re.get(), MPFR_RNDU);
    mpfr_sqr(t.get(), im.get(), MPFR_RNDU);
    mpfr_add(r.get(), r.get(), t.get(), MPFR_RNDU);
    mpfr_sqrt(r.get(), r.get(), MPFR_RNDU);
    return r;
}

BigFloat lower_abs(const ComplexBall& b)
{
    BigFloat r(radius_precision), t(radius_precision);
    BigFloat re = b.re().mig(), im = b.im().mig();
    mpfr_sqr(r.get(), re.get(), MPFR_RNDD);
    mpfr_sqr(t.get(), im.get(), MPFR_RNDD);
    mpfr_add(r.get(), r.get(), t.get(), MPFR_RNDD);
    mpfr_sqrt(r.get(), r.get(), MPFR_RNDD);
    return r;
}

std::optional<std::vector<ComplexEnclosure>> certify(const RationalPoly& p, const std::vector<CFloat>& z,
                                                      mpfr_prec_t prec)
{
    std::size_t n = z.size();
    std::vector<ComplexBall> centers;
    for (const auto& r : z) centers.emplace_back(Ball(r.re, BigFloat(radius_precision)), Ball(r.im, BigFloat(radius_precision)));
    Ball lc = Ball::exact(p.leading(), prec);
    std::vector<BigFloat> radii;
    BigFloat dmin(radius_precision);
    mpfr_set_inf(dmin.get(), 1);
    try {
        for (std::size_t i = 0; i < n; ++i) {
            ComplexBall den{lc, Ball(prec)};
            for (std::size_t j = 0; j < n; ++j) {
                if (j == i) continue;
                ComplexBall diff = centers[i] - centers[j];
                if (j > i) {
                    BigFloat d = lower_abs(diff);
                    if (mpfr_less_p(d.get(), dmin.get())) dmin = d;
                }
                den = den * diff;
            }
            ComplexBall w = evaluate(p.coeffs(), centers[i]) / den;
            BigFloat r = upper_abs(w);
            mpfr_mul_ui(r.get(), r.get(), static_cast<unsigned long>(n), MPFR_RNDU);
            radii.push_back(r);
        }
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::precision_exhausted) return std::nullopt;
        throw;
    }
    BigFloat half(radius_precision);
    mpfr_div_2ui(half.get(), dmin.get(), 1, MPFR_RNDD);
    std::vector<ComplexEnclosure> out;
    for (std::size_t i = 0; i < n; ++i) {
        if (n > 1 && !mpfr_less_p(radii[i].get(), half.get())) return std::nullopt;
        ComplexEnclosure e{z[i].re, z[i].im, radii[i], false};
        if (z[i].im.is_zero()) {
            // the disk is symmetric about the axis and holds one root, so the root is real;
            // the sign change below is the explicit witness
            Rational c = z[i].re.to_rational(), r = radii[i].to_rational();
            // (an exact rational root at the center or an endpoint is its own witness)
            int mid = sgn(p.eval(c)), lo = sgn(p.eval(c - r)), hi = sgn(p.eval(c + r));
            if (mid != 0 && lo != 0 && hi != 0 && lo == hi) return std::nullopt;
            e.certified_real = true;
        } else {
            BigFloat aim(prec);
            mpfr_abs(aim.get(), z[i].im.get(), MPFR_RNDN);
            if (!mpfr_less_p(radii[i].get(), aim.get())) return std::nullopt;
        }
        out.push_back(std::move(e));
    }
    return out;
}

}  // namespace

std::vector<ComplexEnclosure> isolate_roots(const RationalPoly& p, long precision_bits)
{
    if (p.is_zero()) fail(ErrorKind::validation, "root isolation of the zero polynomial");
    if (precision_bits < 64) fail(ErrorKind::validation, "precision must be at least 64 bits");
    if (!is_squarefree(p)) fail(ErrorKind::not_squarefree, "root isolation needs a squarefree polynomial");
    int n = p.degree();
    if (n == 0) return {};
    auto prec = static_cast<mpfr_prec_t>(precision_bits);
    if (n == 1) {
        Rational root = -p.coeff(0) / p.coeff(1);
        Ball b = Ball::exact(root, prec);
        return {ComplexEnclosure{b.mid(), BigFloat(prec), b.rad(), true}};
    }
    std::vector<CFloat> z;
    for (const auto& s : double_seeds(p)) {
        CFloat c(prec);
        mpfr_set_d(c.re.get(), s.real(), MPFR_RNDN);
        mpfr_set_d(c.im.get(), s.imag(), MPFR_RNDN);
        z.push_back(std::move(c));
    }
    while (true) {
        aberth(p, z, prec);
        symmetrize(z, prec);
        if (auto out = certify(p, z, prec)) {
            std::sort(out->begin(), out->end(), [](const ComplexEnclosure& a, const ComplexEnclosure& b) {
                int c = mpfr_cmp(a.re_mid.get(), b.re_mid.get());
                if (c != 0) return c < 0;
                return mpfr_less_p(a.im_mid.get(), b.im_mid.get()) != 0;
            });
            return std::move(*out);
        }
        if (prec * 2 > max_precision)
            fail(ErrorKind::precision_exhausted, "roots not separated at " + std::to_string(max_precision) + " bits");
        prec *= 2;
        for (auto& c : z) {
            mpfr_prec_round(c.re.get(), prec, MPFR_RNDN);
            mpfr_prec_round(c.im.get(), prec, MPFR_RNDN);
        }
    }
}

std::vector<ComplexEnclosure> refine_roots(const RationalPoly& p, const std::vector<ComplexEnclosure>& coarse,
                                           long precision_bits)
{
    if (coarse.empty() || precision_bits <= coarse.front().precision()) return coarse;
    std::vector<ComplexEnclosure> fresh = isolate_roots(p, precision_bits);
    std::vector<ComplexEnclosure> ordered;
    ordered.reserve(fresh.size());
    for (const auto& old : coarse) {
        ComplexBall ob = old.ball();
        const ComplexEnclosure* hit = nullptr;
        for (const auto& f : fresh) {
            if (!f.ball().overlaps(ob)) continue;
            if (hit) fail(ErrorKind::internal, "root order ambiguous after refinement");
            hit = &f;
        }
        if (!hit) fail(ErrorKind::internal, "refined root outside its coarse enclosure");
        // an exact center found at low precision can beat the fresh disk
        ordered.push_back(mpfr_cmp(hit->radius.get(), old.radius.get()) > 0 ? old : *hit);
    }
    return ordered;
}

IrreducibleRoots analyze_irreducible(const RationalPoly& q, long precision_bits)
{
    IrreducibleRoots out;
    out.poly = q;
    bool reciprocal = is_reciprocal(q);
    long prec = precision_bits;
    while (true) {
        out.roots = isolate_roots(q, prec);
        out.precision = prec;
        out.circle_side.assign(out.roots.size(), 2);
        bool decided = true;
        std::vector<ComplexBall> balls;
        for (const auto& r : out.roots) balls.push_back(r.ball());
        Ball one = Ball::exact(1, prec);
        for (std::size_t i = 0; i < balls.size(); ++i) {
            Ball m2 = balls[i].abs2();
            if (m2.certainly_less(one)) {
                out.circle_side[i] = -1;
                continue;
            }
            if (one.certainly_less(m2)) {
                out.circle_side[i] = 1;
                continue;
            }
            if (reciprocal) {
                try {
                    ComplexBall inv = ComplexBall::exact(1, prec) / balls[i].conj();
                    bool alone = true;
                    for (std::size_t j = 0; j < balls.size(); ++j)
                        if (j != i && inv.overlaps(balls[j])) alone = false;
                    if (alone) {
                        out.circle_side[i] = 0;
                        continue;
                    }
                } catch (const Error& e) {
                    if (e.kind() != ErrorKind::precision_exhausted) throw;
                }
            }
            decided = false;
        }
        if (decided) return out;
        if (prec * 2 > max_precision)
            fail(ErrorKind::precision_exhausted, "unit-circle position undecided at " + std::to_string(max_precision) + " bits");
        prec *= 2;
    }
}

Rational rational_reconstruct(const BigFloat& x, const Integer& denominator_bound)
{
    Rational v = x.to_rational();
    Integer h0 = 0, h1 = 1, k0 = 1, k1 = 0;
    Integer num = v.get_num(), den = v.get_den();
    while (den != 0) {
        Integer a;
        mpz_fdiv_q(a.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        Integer h2 = a * h1 + h0, k2 = a * k1 + k0;
        if (k2 > denominator_bound) break;
        h0 = h1;
        h1 = h2;
        k0 = k1;
        k1 = k2;
        Integer r = num - a * den;
        num = den;
        den = r;
    }
    if (k1 == 0) return Rational(h1);
    return make_rational(h1, k1);
}

RootMatch match_root(const std::vector<RationalPoly>& candidates, const std::function<ComplexBall(long)>& target,
                     long precision_bits)
{
    for (long prec = precision_bits; prec <= max_precision; prec *= 2) {
        std::optional<ComplexBall> t;
        try {
            t = target(prec);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::precision_exhausted) throw;
            continue;
        }
        std::vector<RootMatch> hits;
        for (std::size_t c = 0; c < candidates.size(); ++c) {
            auto roots = isolate_roots(candidates[c], prec);
            for (std::size_t r = 0; r < roots.size(); ++r)
                if (roots[r].ball().overlaps(*t)) hits.push_back({c, r, roots[r], prec});
        }
        if (hits.size() == 1) return hits.front();
        if (hits.empty()) fail(ErrorKind::internal, "target value is not a root of any candidate");
    }
    fail(ErrorKind::precision_exhausted, "root selection ambiguous at " + std::to_string(max_precision) + " bits");
}

}  // namespace endoscope
