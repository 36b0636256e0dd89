#include "endoscope/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <random>

#include "endoscope/error.hpp"

namespace endoscope {

namespace {

/* ---- polynomials over Z/p, p an odd prime below 2^31 ---- */

using ModPoly = std::vector<std::uint64_t>;

void trim(ModPoly& a)
{
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int mdeg(const ModPoly& a) { return static_cast<int>(a.size()) - 1; }

std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p)
{
    std::uint64_t r = 1;
    b %= p;
    while (e) {
        if (e & 1U) r = r * b % p;
        b = b * b % p;
        e >>= 1U;
    }
    return r;
}

std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p) { return mod_pow(a, p - 2, p); }

ModPoly msub(const ModPoly& a, const ModPoly& b, std::uint64_t p)
{
    ModPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + p - b[i]) % p;
    trim(r);
    return r;
}

ModPoly mmul(const ModPoly& a, const ModPoly& b, std::uint64_t p)
{
    if (a.empty() || b.empty()) return {};
    ModPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    trim(r);
    return r;
}

void mdivmod(const ModPoly& a, const ModPoly& b, std::uint64_t p, ModPoly* q, ModPoly* r)
{
    ModPoly rem = a;
    int db = mdeg(b);
    std::uint64_t inv = mod_inv(b.back(), p);
    ModPoly quot;
    if (mdeg(rem) >= db) quot.assign(static_cast<std::size_t>(mdeg(rem) - db + 1), 0);
    for (int k = mdeg(rem) - db; k >= 0; --k) {
        std::uint64_t c = rem[static_cast<std::size_t>(k + db)] * inv % p;
        quot[static_cast<std::size_t>(k)] = c;
        if (!c) continue;
        for (int j = 0; j <= db; ++j) {
            auto idx = static_cast<std::size_t>(k + j);
            rem[idx] = (rem[idx] + p - c * b[static_cast<std::size_t>(j)] % p) % p;
        }
    }
    trim(rem);
    trim(quot);
    if (q) *q = std::move(quot);
    if (r) *r = std::move(rem);
}

ModPoly mmod(const ModPoly& a, const ModPoly& b, std::uint64_t p)
{
    ModPoly r;
    mdivmod(a, b, p, nullptr, &r);
    return r;
}

ModPoly mmonic(ModPoly a, std::uint64_t p)
{
    if (a.empty()) return a;
    std::uint64_t inv = mod_inv(a.back(), p);
    for (auto& c : a) c = c * inv % p;
    return a;
}

ModPoly mgcd(ModPoly a, ModPoly b, std::uint64_t p)
{
    while (!b.empty()) {
        ModPoly r = mmod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return mmonic(std::move(a), p);
}

/* s, t with s*a + t*b = 1 (a, b coprime) */
void mext_gcd(const ModPoly& a, const ModPoly& b, std::uint64_t p, ModPoly* s, ModPoly* t)
{
    ModPoly r0 = a, r1 = b, s0{1}, s1, t0, t1{1};
    while (!r1.empty()) {
        ModPoly q, r;
        mdivmod(r0, r1, p, &q, &r);
        ModPoly s2 = msub(s0, mmul(q, s1, p), p);
        ModPoly t2 = msub(t0, mmul(q, t1, p), p);
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    std::uint64_t inv = mod_inv(r0.back(), p);
    for (auto& c : s0) c = c * inv % p;
    for (auto& c : t0) c = c * inv % p;
    *s = s0;
    *t = t0;
}

ModPoly mderivative(const ModPoly& a, std::uint64_t p)
{
    if (a.size() <= 1) return {};
    ModPoly r(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * (i % p) % p;
    trim(r);
    return r;
}

ModPoly mpowmod(ModPoly base, const Integer& exp, const ModPoly& modulus, std::uint64_t p)
{
    ModPoly result{1};
    base = mmod(base, modulus, p);
    std::size_t bits = mpz_sizeinbase(exp.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        result = mmod(mmul(result, result, p), modulus, p);
        if (mpz_tstbit(exp.get_mpz_t(), i)) result = mmod(mmul(result, base, p), modulus, p);
    }
    return result;
}

struct DegreeBlock {
    ModPoly product;
    int degree;
};

std::vector<DegreeBlock> distinct_degree(ModPoly f, std::uint64_t p)
{
    std::vector<DegreeBlock> out;
    ModPoly x{0, 1};
    ModPoly h = x;
    Integer pz(static_cast<unsigned long>(p));
    int d = 1;
    while (2 * d <= mdeg(f)) {
        h = mpowmod(h, pz, f, p);
        ModPoly g = mgcd(msub(h, x, p), f, p);
        if (mdeg(g) > 0) {
            out.push_back({g, d});
            ModPoly q;
            mdivmod(f, g, p, &q, nullptr);
            f = q;
            h = mmod(h, f, p);
        }
        ++d;
    }
    if (mdeg(f) > 0) out.push_back({mmonic(f, p), mdeg(f)});
    return out;
}

void equal_degree(const ModPoly& g, int d, std::uint64_t p, std::mt19937_64& rng, std::vector<ModPoly>& out)
{
    if (mdeg(g) == d) {
        out.push_back(g);
        return;
    }
    Integer exp = (pow(Integer(static_cast<unsigned long>(p)), static_cast<unsigned long>(d)) - 1) / 2;
    std::uniform_int_distribution<std::uint64_t> coeff(0, p - 1);
    while (true) {
        ModPoly a(static_cast<std::size_t>(mdeg(g)));
        for (auto& c : a) c = coeff(rng);
        trim(a);
        if (mdeg(a) < 1) continue;
        ModPoly b = msub(mpowmod(a, exp, g, p), ModPoly{1}, p);
        ModPoly h = mgcd(b, g, p);
        if (mdeg(h) > 0 && mdeg(h) < mdeg(g)) {
            ModPoly q;
            mdivmod(g, h, p, &q, nullptr);
            equal_degree(h, d, p, rng, out);
            equal_degree(mmonic(q, p), d, p, rng, out);
            return;
        }
    }
}

/* ---- integer polynomials modulo p^k ---- */

using ZPoly = std::vector<Integer>;

void ztrim(ZPoly& a)
{
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Integer zmod(const Integer& a, const Integer& m)
{
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

ZPoly zreduce(ZPoly a, const Integer& m)
{
    for (auto& c : a) c = zmod(c, m);
    ztrim(a);
    return a;
}

ZPoly zmul(const ZPoly& a, const ZPoly& b, const Integer& m)
{
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return zreduce(std::move(r), m);
}

ZPoly zmul_exact(const ZPoly& a, const ZPoly& b)
{
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    ztrim(r);
    return r;
}

ZPoly from_mod(const ModPoly& a)
{
    ZPoly r;
    r.reserve(a.size());
    for (auto c : a) r.emplace_back(static_cast<unsigned long>(c));
    return r;
}

ModPoly to_mod(const ZPoly& a, std::uint64_t p)
{
    ModPoly r(a.size());
    Integer pz(static_cast<unsigned long>(p));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = zmod(a[i], pz).get_ui();
    trim(r);
    return r;
}

ZPoly symmetric(ZPoly a, const Integer& m)
{
    Integer half = m / 2;
    for (auto& c : a) {
        c = zmod(c, m);
        if (c > half) c -= m;
    }
    ztrim(a);
    return a;
}

/* Lifts target = g*h (mod p), g monic, to the same relation modulo p^k.  The
 * target is only known modulo p^k; h keeps the target's leading coefficient. */
void hensel_lift_pair(const ZPoly& target, ModPoly g0, ModPoly h0, std::uint64_t p, unsigned k, ZPoly* g_out,
                      ZPoly* h_out)
{
    Integer pz(static_cast<unsigned long>(p));
    Integer big = pow(pz, k);
    ModPoly s, t;
    mext_gcd(g0, h0, p, &s, &t);
    ZPoly g = from_mod(g0);
    ZPoly h = from_mod(h0);
    h.back() = zmod(target.back(), big);
    Integer m = pz;
    for (unsigned j = 1; j < k; ++j) {
        ZPoly prod = zmul(g, h, big);
        ZPoly e(std::max(target.size(), prod.size()), Integer(0));
        for (std::size_t i = 0; i < target.size(); ++i) e[i] += target[i];
        for (std::size_t i = 0; i < prod.size(); ++i) e[i] -= prod[i];
        e = zreduce(std::move(e), big);
        for (auto& c : e) {
            // exact: target == g*h mod m
            mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
        }
        ModPoly em = to_mod(e, p);
        ModPoly q, r;
        mdivmod(mmul(t, em, p), g0, p, &q, &r);
        ModPoly dh = msub(mmul(s, em, p), ModPoly{}, p);
        {
            ModPoly qh = mmul(q, to_mod(h, p), p);
            ModPoly sum(std::max(dh.size(), qh.size()), 0);
            for (std::size_t i = 0; i < dh.size(); ++i) sum[i] = dh[i];
            for (std::size_t i = 0; i < qh.size(); ++i) sum[i] = (sum[i] + qh[i]) % p;
            trim(sum);
            dh = sum;
        }
        ZPoly dg = from_mod(r), dhz = from_mod(dh);
        if (g.size() < dg.size()) g.resize(dg.size(), Integer(0));
        for (std::size_t i = 0; i < dg.size(); ++i) g[i] += m * dg[i];
        if (h.size() < dhz.size()) h.resize(dhz.size(), Integer(0));
        for (std::size_t i = 0; i < dhz.size(); ++i) h[i] += m * dhz[i];
        g = zreduce(std::move(g), big);
        h = zreduce(std::move(h), big);
        m *= pz;
    }
    *g_out = std::move(g);
    *h_out = std::move(h);
}

/* Monic lifts of the modular factors with target == lc * prod (mod p^k). */
std::vector<ZPoly> hensel_lift_all(const ZPoly& target, const std::vector<ModPoly>& factors, std::uint64_t p,
                                   unsigned k)
{
    Integer big = pow(Integer(static_cast<unsigned long>(p)), k);
    if (factors.size() == 1) {
        Integer inv;
        Integer lc = zmod(target.back(), big);
        mpz_invert(inv.get_mpz_t(), lc.get_mpz_t(), big.get_mpz_t());
        ZPoly g = target;
        for (auto& c : g) c *= inv;
        return {zreduce(std::move(g), big)};
    }
    std::uint64_t lcp = to_mod(ZPoly{target.back()}, p).at(0);
    ModPoly rest{lcp};
    for (std::size_t i = 1; i < factors.size(); ++i) rest = mmul(rest, factors[i], p);
    ZPoly g, h;
    hensel_lift_pair(target, factors[0], rest, p, k, &g, &h);
    std::vector<ModPoly> tail(factors.begin() + 1, factors.end());
    std::vector<ZPoly> lifted = hensel_lift_all(h, tail, p, k);
    lifted.insert(lifted.begin(), g);
    return lifted;
}

Integer content(const ZPoly& a)
{
    Integer c = 0;
    for (const auto& x : a) c = gcd(c, x);
    return c;
}

ZPoly primitive(ZPoly a)
{
    Integer c = content(a);
    if (c == 0) return a;
    if (a.back() < 0) c = -c;
    for (auto& x : a) x /= c;
    return a;
}

std::vector<std::uint64_t> small_primes(std::uint64_t limit)
{
    std::vector<bool> sieve(limit + 1, true);
    std::vector<std::uint64_t> out;
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (!sieve[i]) continue;
        out.push_back(i);
        for (std::uint64_t j = i * i; j <= limit; j += i) sieve[j] = false;
    }
    return out;
}

/* Factors a primitive, squarefree integer polynomial of positive degree. */
std::vector<ZPoly> factor_squarefree(const ZPoly& f)
{
    int n = static_cast<int>(f.size()) - 1;
    if (n <= 1) return {f};

    static const std::vector<std::uint64_t> primes = small_primes(20000);
    std::uint64_t best_p = 0;
    std::size_t best_count = 0;
    int tried = 0;
    for (std::uint64_t p : primes) {
        if (p == 2) continue;
        Integer pz(static_cast<unsigned long>(p));
        if (zmod(f.back(), pz) == 0) continue;
        ModPoly fm = mmonic(to_mod(f, p), p);
        if (mdeg(mgcd(fm, mderivative(fm, p), p)) > 0) continue;
        std::size_t count = 0;
        for (const auto& blk : distinct_degree(fm, p)) count += static_cast<std::size_t>(mdeg(blk.product) / blk.degree);
        if (count == 1) return {f};
        if (best_p == 0 || count < best_count) {
            best_p = p;
            best_count = count;
        }
        if (++tried == 5) break;
    }
    if (best_p == 0) fail(ErrorKind::internal, "no suitable prime for modular factorization");
    std::uint64_t p = best_p;

    ModPoly fm = mmonic(to_mod(f, p), p);
    std::mt19937_64 rng(0x5eed1234ULL + p);
    std::vector<ModPoly> modular;
    for (const auto& blk : distinct_degree(fm, p)) equal_degree(blk.product, blk.degree, p, rng, modular);
    std::sort(modular.begin(), modular.end(), [](const ModPoly& a, const ModPoly& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
    });

    // coefficient bound for any factor of f, scaled by |lc|
    Integer norm2 = 0;
    for (const auto& c : f) norm2 += c * c;
    Integer root;
    mpz_sqrt(root.get_mpz_t(), norm2.get_mpz_t());
    Integer bound = 2 * abs(f.back()) * (root + 1) * pow(Integer(2), static_cast<unsigned long>(n));
    Integer pz(static_cast<unsigned long>(p));
    unsigned k = 1;
    Integer big = pz;
    while (big <= 2 * bound) {
        big *= pz;
        ++k;
    }

    std::vector<ZPoly> lifted = hensel_lift_all(f, modular, p, k);

    std::vector<ZPoly> result;
    ZPoly rem = f;
    std::vector<std::size_t> alive(lifted.size());
    for (std::size_t i = 0; i < alive.size(); ++i) alive[i] = i;

    std::size_t s = 1;
    while (2 * s <= alive.size()) {
        bool found = false;
        std::vector<std::size_t> idx(s);
        for (std::size_t i = 0; i < s; ++i) idx[i] = i;
        while (true) {
            Integer lc = rem.back();
            ZPoly g{lc};
            for (auto i : idx) g = zmul(g, lifted[alive[i]], big);
            g = symmetric(g, big);
            bool plausible = true;
            if (!rem.empty() && rem[0] != 0 && !g.empty()) {
                Integer c0 = lc * rem[0];
                if (g[0] == 0 || !mpz_divisible_p(c0.get_mpz_t(), g[0].get_mpz_t())) plausible = false;
            }
            if (plausible) {
                ZPoly h{lc};
                for (std::size_t j = 0, m = 0; j < alive.size(); ++j) {
                    if (m < s && idx[m] == j) {
                        ++m;
                        continue;
                    }
                    h = zmul(h, lifted[alive[j]], big);
                }
                h = symmetric(h, big);
                ZPoly lhs = zmul_exact(g, h);
                ZPoly rhs = rem;
                for (auto& c : rhs) c *= lc;
                if (lhs == rhs) {
                    result.push_back(primitive(g));
                    rem = primitive(h);
                    std::vector<std::size_t> next;
                    for (std::size_t j = 0, m = 0; j < alive.size(); ++j) {
                        if (m < s && idx[m] == j) {
                            ++m;
                            continue;
                        }
                        next.push_back(alive[j]);
                    }
                    alive = std::move(next);
                    found = true;
                    break;
                }
            }
            // next combination
            std::size_t i = s;
            while (i > 0 && idx[i - 1] == alive.size() - s + i - 1) --i;
            if (i == 0) break;
            ++idx[i - 1];
            for (std::size_t j = i; j < s; ++j) idx[j] = idx[j - 1] + 1;
        }
        if (!found) ++s;
    }
    if (rem.size() > 1) result.push_back(primitive(rem));
    return result;
}

}  // namespace

std::vector<PolyFactor> factor_over_q(const RationalPoly& p)
{
    if (p.is_zero()) fail(ErrorKind::validation, "cannot factor the zero polynomial");
    if (p.degree() > max_factor_degree)
        fail(ErrorKind::degree_cap, "factorization degree cap " + std::to_string(max_factor_degree) + " exceeded");
    std::vector<PolyFactor> out;
    for (const auto& [part, mult] : squarefree_decomposition(p)) {
        ZPoly z = part.primitive_integer_coeffs();
        for (const auto& piece : factor_squarefree(z)) {
            out.push_back({RationalPoly::from_integers(piece).monic(), mult});
        }
    }
    std::sort(out.begin(), out.end(), [](const PolyFactor& a, const PolyFactor& b) {
        if (a.factor != b.factor) return a.factor < b.factor;
        return a.multiplicity < b.multiplicity;
    });
    return out;
}

bool is_irreducible(const RationalPoly& p)
{
    if (p.degree() < 1) return false;
    auto f = factor_over_q(p);
    return f.size() == 1 && f[0].multiplicity == 1;
}

RationalPoly expand_factorization(const Rational& leading, const std::vector<PolyFactor>& factors)
{
    RationalPoly r = RationalPoly::constant(leading);
    for (const auto& f : factors) r *= f.factor.pow(static_cast<unsigned>(f.multiplicity));
    return r;
}

}  // namespace endoscope
