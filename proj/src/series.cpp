#include "wittdiv/series.hpp"

#include <algorithm>
#include <cstring>
#include <numeric>

namespace wittdiv {

MonomialSet::MonomialSet(int nvars, int bound, std::vector<int> caps) : nvars_(nvars), bound_(bound) {
    if (nvars < 1) throw PreconditionError("a series needs at least one variable");
    if (bound < 0) throw PreconditionError("truncation bound must be nonnegative");
    if (caps.empty()) caps.assign(static_cast<std::size_t>(nvars), bound);
    if (static_cast<int>(caps.size()) != nvars) throw PreconditionError("one cap per variable is required");
    for (auto& c : caps) {
        if (c < 0) throw PreconditionError("caps must be nonnegative");
        c = std::min(c, bound);
    }
    caps_ = std::move(caps);

    stride_.resize(static_cast<std::size_t>(nvars));
    std::int64_t total = 1;
    for (int v = 0; v < nvars; ++v) {
        stride_[static_cast<std::size_t>(v)] = total;
        total *= caps_[static_cast<std::size_t>(v)] + 1;
        if (total > (std::int64_t{1} << 27)) throw PreconditionError("truncation box is too large");
    }
    lookup_.assign(static_cast<std::size_t>(total), -1);

    // Enumerate the box, keep vectors within the degree bound, order by degree.
    std::vector<std::pair<int, std::int64_t>> keep;
    std::vector<int> e(static_cast<std::size_t>(nvars), 0);
    for (std::int64_t key = 0; key < total; ++key) {
        std::int64_t r = key;
        int d = 0;
        for (int v = 0; v < nvars; ++v) {
            int cap1 = caps_[static_cast<std::size_t>(v)] + 1;
            d += static_cast<int>(r % cap1);
            r /= cap1;
        }
        if (d <= bound) keep.emplace_back(d, key);
    }
    std::stable_sort(keep.begin(), keep.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    flat_.reserve(keep.size() * static_cast<std::size_t>(nvars));
    deg_.reserve(keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i) {
        std::int64_t r = keep[i].second;
        for (int v = 0; v < nvars; ++v) {
            int cap1 = caps_[static_cast<std::size_t>(v)] + 1;
            flat_.push_back(static_cast<int>(r % cap1));
            r /= cap1;
        }
        deg_.push_back(keep[i].first);
        lookup_[static_cast<std::size_t>(keep[i].second)] = static_cast<std::int32_t>(i);
    }
}

bool MonomialSet::boxed() const {
    return std::any_of(caps_.begin(), caps_.end(), [&](int c) { return c < bound_; });
}

long MonomialSet::index_of(std::span<const int> e) const {
    if (static_cast<int>(e.size()) != nvars_) return -1;
    int d = 0;
    for (int v = 0; v < nvars_; ++v) {
        int x = e[static_cast<std::size_t>(v)];
        if (x < 0 || x > caps_[static_cast<std::size_t>(v)]) return -1;
        d += x;
    }
    if (d > bound_) return -1;
    return lookup_[static_cast<std::size_t>(key_of(e))];
}

SetPtr meet(const SetPtr& a, const SetPtr& b) {
    if (a == b || a->same_shape(*b)) return a;
    if (a->nvars() != b->nvars()) throw PreconditionError("series have different numbers of variables");
    std::vector<int> caps(static_cast<std::size_t>(a->nvars()));
    for (std::size_t v = 0; v < caps.size(); ++v) caps[v] = std::min(a->caps()[v], b->caps()[v]);
    return MonomialSet::make(a->nvars(), std::min(a->bound(), b->bound()), std::move(caps));
}

namespace {

// Laurent polynomials over Z are mapped to integers by q -> 2^B (B a multiple of
// the limb width). Sums of products are then single big-integer products, and
// the coefficients are recovered as balanced base-2^B digits.
class Packer {
public:
    long bits() const { return bits_; }
    std::uint64_t epoch() const { return epoch_; }

    void ensure(long needed_bits) {
        if (needed_bits <= bits_) return;
        long b = std::max(needed_bits, bits_ + bits_ / 2);
        bits_ = (b + GMP_NUMB_BITS - 1) / GMP_NUMB_BITS * GMP_NUMB_BITS;
        ++epoch_;
        mpz_ui_pow_ui(base_.get_mpz_t(), 2, static_cast<unsigned long>(bits_));
    }

    void pack(const ZLaurent& p, mpz_class& out) const {
        const auto& d = p.dense();
        const std::size_t w = static_cast<std::size_t>(bits_ / GMP_NUMB_BITS);
        const std::size_t n = d.size() * w;
        mpz_class neg;
        mp_limb_t* pp = mpz_limbs_write(out.get_mpz_t(), static_cast<mp_size_t>(n));
        mp_limb_t* np = mpz_limbs_write(neg.get_mpz_t(), static_cast<mp_size_t>(n));
        std::memset(pp, 0, n * sizeof(mp_limb_t));
        std::memset(np, 0, n * sizeof(mp_limb_t));
        for (std::size_t i = 0; i < d.size(); ++i) {
            int s = sgn(d[i]);
            if (s == 0) continue;
            std::size_t sz = mpz_size(d[i].get_mpz_t());
            if (sz > w) throw IntegralityError("packing slot too narrow");
            std::memcpy((s > 0 ? pp : np) + i * w, mpz_limbs_read(d[i].get_mpz_t()), sz * sizeof(mp_limb_t));
        }
        mpz_limbs_finish(out.get_mpz_t(), static_cast<mp_size_t>(n));
        mpz_limbs_finish(neg.get_mpz_t(), static_cast<mp_size_t>(n));
        out -= neg;
    }

    std::vector<mpz_class> unpack(const mpz_class& s) const {
        std::vector<mpz_class> out;
        int sign = sgn(s);
        if (sign == 0) return out;
        const std::size_t w = static_cast<std::size_t>(bits_ / GMP_NUMB_BITS);
        const std::size_t n = mpz_size(s.get_mpz_t());
        const mp_limb_t* lp = mpz_limbs_read(s.get_mpz_t());
        out.reserve(n / w + 2);
        unsigned long carry = 0;
        for (std::size_t off = 0; off < n || carry != 0; off += w) {
            mpz_class digit;
            if (off < n) {
                mpz_t ro;
                mpz_roinit_n(ro, lp + off, static_cast<mp_size_t>(std::min(w, n - off)));
                mpz_add_ui(digit.get_mpz_t(), ro, carry);
            } else {
                digit = carry;
            }
            if (static_cast<long>(mpz_sizeinbase(digit.get_mpz_t(), 2)) >= bits_ && digit != 0) {
                digit -= base_;
                carry = 1;
            } else {
                carry = 0;
            }
            if (sign < 0) digit = -digit;
            out.push_back(std::move(digit));
        }
        return out;
    }

private:
    long bits_ = 0;
    std::uint64_t epoch_ = 0;
    mpz_class base_;
};

long ceil_log2(std::size_t n) {
    long b = 0;
    while ((std::size_t{1} << b) < n) ++b;
    return b;
}

// Upper bound on log2 of the l1 norm of the coefficient vector.
long l1_bits(const ZLaurent& p) {
    long m = 0;
    std::size_t cnt = 0;
    for (const auto& c : p.dense()) {
        if (c == 0) continue;
        m = std::max(m, static_cast<long>(mpz_sizeinbase(c.get_mpz_t(), 2)));
        ++cnt;
    }
    return m + ceil_log2(cnt);
}

struct PackedEntry {
    mpz_class value;
    std::uint64_t epoch = 0;
};

}  // namespace

std::vector<ZLaurent> exp_from_dlog_packed(const MonomialSet& set, const std::vector<ZLaurent>& g) {
    const std::size_t n = set.size();
    std::vector<ZLaurent> f(n);
    f[0] = ZLaurent(1);
    std::vector<long> gbits(n), fbits(n);
    for (std::size_t i = 0; i < n; ++i) gbits[i] = g[i].is_zero() ? -1 : l1_bits(g[i]);
    fbits[0] = 0;
    std::vector<PackedEntry> pg(n), pf(n);
    Packer packer;
    auto packed = [&](std::vector<PackedEntry>& cache, const ZLaurent& p, std::size_t idx) -> const mpz_class& {
        PackedEntry& e = cache[idx];
        if (e.epoch != packer.epoch()) {
            packer.pack(p, e.value);
            e.epoch = packer.epoch();
        }
        return e.value;
    };

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    mpz_class acc, prod;
    for (std::size_t i = 1; i < n; ++i) {
        pairs.clear();
        long need = 0;
        int lo = 0;
        set.for_each_split(i, [&](std::size_t j, std::size_t k) {
            if (j == 0 || g[j].is_zero() || f[k].is_zero()) return;
            int l = g[j].min_exp() + f[k].min_exp();
            if (pairs.empty() || l < lo) lo = l;
            pairs.emplace_back(j, k);
            need = std::max(need, gbits[j] + fbits[k]);
        });
        if (pairs.empty()) {
            fbits[i] = -1;
            continue;
        }
        packer.ensure(need + ceil_log2(pairs.size()) + 2);
        const long b = packer.bits();
        acc = 0;
        for (auto [j, k] : pairs) {
            mpz_mul(prod.get_mpz_t(), packed(pg, g[j], j).get_mpz_t(), packed(pf, f[k], k).get_mpz_t());
            long shift = static_cast<long>(g[j].min_exp() + f[k].min_exp() - lo) * b;
            if (shift != 0) mpz_mul_2exp(prod.get_mpz_t(), prod.get_mpz_t(), static_cast<mp_bitcnt_t>(shift));
            acc += prod;
        }
        std::vector<mpz_class> digits = packer.unpack(acc);
        const long deg = set.degree(i);
        for (auto& c : digits) c = ring::divide_exact(c, deg);
        f[i] = ZLaurent(lo, std::move(digits));
        fbits[i] = f[i].is_zero() ? -1 : l1_bits(f[i]);
    }
    return f;
}

}  // namespace wittdiv
