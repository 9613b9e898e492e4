#include "hyperarr/admissible.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <limits>
#include <set>

#include "hyperarr/errors.hpp"
#include "hyperarr/kernels.hpp"
#include "hyperarr/matroid.hpp"

namespace hyperarr {

namespace {

std::uint64_t table_mask(unsigned m) {
    return m >= kMaxArity ? ~std::uint64_t{0} : (std::uint64_t{1} << (1u << m)) - 1;
}

void check_arity(unsigned m) {
    if (m == 0) throw Error(ErrorKind::MalformedInput, "m must be positive");
    if (m > kMaxArity) throw Error(ErrorKind::ResourceLimit, "m must be at most " + std::to_string(kMaxArity));
}

}  // namespace

BoolFn::BoolFn(unsigned m, std::uint64_t table) : m_(m), table_(table & table_mask(m)) { check_arity(m); }

BoolFn BoolFn::projection(unsigned m, unsigned h) {
    if (h == 0 || h > m) throw Error(ErrorKind::IndexOutOfRange, "projection index " + std::to_string(h));
    std::uint64_t t = 0;
    for (std::uint32_t w = 0; w < (1u << m); ++w)
        if ((w >> (h - 1)) & 1u) t |= std::uint64_t{1} << w;
    return BoolFn(m, t);
}

BoolFn BoolFn::constant(unsigned m, Sign s) { return BoolFn(m, s == Sign::Minus ? table_mask(m) : 0); }

Sign BoolFn::operator()(std::span<const Sign> args) const {
    if (args.size() != m_) throw Error(ErrorKind::LengthMismatch, "wrong number of arguments");
    return (*this)(encode_word(args));
}

BoolFn BoolFn::conjugate() const noexcept {
    const std::uint32_t full = word_count() - 1;
    std::uint64_t t = 0;
    for (std::uint32_t w = 0; w <= full; ++w)
        if (!((table_ >> (w ^ full)) & 1u)) t |= std::uint64_t{1} << w;
    BoolFn g;
    g.m_ = m_;
    g.table_ = t;
    return g;
}

bool BoolFn::fixes_endpoints() const noexcept {
    return (*this)(0) == Sign::Plus && (*this)(word_count() - 1) == Sign::Minus;
}

std::string BoolFn::hex() const {
    const unsigned digits = std::max(1u, word_count() / 4);
    char buf[24];
    std::snprintf(buf, sizeof buf, "%0*llx", static_cast<int>(digits), static_cast<unsigned long long>(table_));
    return buf;
}

std::uint32_t encode_word(std::span<const Sign> word) {
    std::uint32_t w = 0;
    for (std::size_t i = 0; i < word.size(); ++i) w |= to_bit(word[i]) << i;
    return w;
}

BoolFn PhiFamily::fn(std::size_t j, Sign sigma) const {
    const BoolFn& f = plus_fns.at(j);
    return sigma == Sign::Plus ? f : f.conjugate();
}

bool PhiFamily::satisfies_unanimity() const noexcept {
    return std::all_of(plus_fns.begin(), plus_fns.end(), [](const BoolFn& f) { return f.fixes_endpoints(); });
}

PhiFamily PhiFamily::projection(std::size_t n, unsigned m, unsigned h) {
    return PhiFamily{m, std::vector<BoolFn>(n, BoolFn::projection(m, h))};
}

bool canonical_less(const PhiFamily& a, const PhiFamily& b) {
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t j = 0; j < n; ++j) {
        const std::uint64_t diff = a.plus_fns[j].table() ^ b.plus_fns[j].table();
        if (diff) return ((a.plus_fns[j].table() >> std::countr_zero(diff)) & 1u) == 0;
    }
    return a.size() < b.size();
}

const Chamber& AdmissibleMap::operator()(std::span<const std::size_t> tuple) const {
    const auto id = chambers->find(induced_phi(*chambers, family, tuple));
    if (!id) throw Error(ErrorKind::InternalInconsistency, "admissible map produced an unrealizable address");
    return (*chambers)[*id];
}

SignVector induced_phi(const ChamberSet& chambers, const PhiFamily& family, std::span<const std::size_t> tuple) {
    const std::size_t n = chambers.arrangement().size();
    if (tuple.size() != family.m) throw Error(ErrorKind::LengthMismatch, "tuple length differs from m");
    if (family.size() != n) throw Error(ErrorKind::LengthMismatch, "family size differs from |A|");
    std::vector<Chamber> cs;
    cs.reserve(tuple.size());
    for (auto id : tuple) cs.push_back(chambers[id]);
    std::uint64_t bits = 0;
    for (std::size_t j = 0; j < n; ++j) {
        const auto word = epsilon_tuple(chambers, j, Sign::Plus, cs);
        bits |= std::uint64_t{to_bit(family.plus_fns[j](encode_word(word)))} << j;
    }
    return SignVector(n, bits);
}

std::uint64_t tuple_count(const ChamberSet& chambers, unsigned m, std::uint64_t max_tuples) {
    std::uint64_t total = 1;
    for (unsigned i = 0; i < m; ++i) {
        if (total > max_tuples / std::max<std::uint64_t>(chambers.size(), 1))
            throw Error(ErrorKind::ResourceLimit,
                        "|Ch|^m exceeds the tuple bound " + std::to_string(max_tuples));
        total *= chambers.size();
    }
    if (total > max_tuples)
        throw Error(ErrorKind::ResourceLimit, "|Ch|^m exceeds the tuple bound " + std::to_string(max_tuples));
    return total;
}

bool is_admissible(const ChamberSet& chambers, const PhiFamily& family, std::uint64_t max_tuples) {
    const std::size_t n = chambers.arrangement().size();
    if (family.size() != n) throw Error(ErrorKind::LengthMismatch, "family size differs from |A|");
    for (const auto& f : family.plus_fns)
        if (f.arity() != family.m) throw Error(ErrorKind::LengthMismatch, "truth table arity differs from m");
    if (!family.satisfies_unanimity()) return false;
    tuple_count(chambers, family.m, max_tuples);

    std::vector<std::size_t> tuple(family.m, 0);
    for (;;) {
        if (!chambers.find(induced_phi(chambers, family, tuple))) return false;
        unsigned i = 0;
        while (i < family.m && ++tuple[i] == chambers.size()) tuple[i++] = 0;
        if (i == family.m) return true;
    }
}

std::vector<AdmissibleMap> enumerate_admissible(std::shared_ptr<const ChamberSet> chambers, unsigned m,
                                                const AdmissibleOptions& options) {
    check_arity(m);
    const std::size_t n = chambers->arrangement().size();
    const unsigned per_fn = kernels::free_bits_per_fn(m);
    const std::uint64_t exponent = options.shared_phi ? per_fn : n * per_fn;
    if (exponent > options.max_exponent || exponent > 62)
        throw Error(ErrorKind::ResourceLimit, "candidate space 2^" + std::to_string(exponent) +
                                                  " exceeds the exponent cap " +
                                                  std::to_string(options.max_exponent));
    tuple_count(*chambers, m, options.max_tuples);

    const auto families = options.exec == Exec::Parallel
                              ? kernels::search_families_parallel(*chambers, m, options.shared_phi)
                              : kernels::search_families_serial(*chambers, m, options.shared_phi);
    std::vector<AdmissibleMap> maps;
    maps.reserve(families.size());
    for (const auto& f : families) maps.push_back(AdmissibleMap{f, chambers});
    return maps;
}

std::vector<AdmissibleMap> enumerate_admissible(const Arrangement& a, unsigned m, const AdmissibleOptions& options) {
    ChamberOptions copts;
    copts.exec = options.exec;
    return enumerate_admissible(enumerate_chambers(a, copts), m, options);
}

BlockProfile block_profile(const Arrangement& a) {
    BlockProfile p;
    for (const auto& b : decompose(a).blocks) {
        if (b.size() == 1)
            ++p.singletons;
        else if (b.size() >= 3)
            ++p.large;
        else
            throw Error(ErrorKind::InternalInconsistency, "indecomposable block with two hyperplanes");
    }
    return p;
}

BigInt count_admissible_formula(std::size_t singletons, std::size_t large, unsigned m) {
    BigInt count = 1;
    mpz_mul_2exp(count.get_mpz_t(), count.get_mpz_t(), singletons * ((std::uint64_t{1} << m) - 2));
    BigInt mm = m;
    BigInt power;
    mpz_pow_ui(power.get_mpz_t(), mm.get_mpz_t(), large);
    return count * power;
}

BigInt count_admissible_formula(const Arrangement& a, unsigned m) {
    check_arity(m);
    const auto p = block_profile(a);
    return count_admissible_formula(p.singletons, p.large, m);
}

std::optional<unsigned> is_projective(const PhiFamily& family) {
    if (family.plus_fns.empty()) return std::nullopt;
    for (unsigned h = 1; h <= family.m; ++h) {
        const BoolFn proj = BoolFn::projection(family.m, h);
        if (std::all_of(family.plus_fns.begin(), family.plus_fns.end(),
                        [&](const BoolFn& f) { return f == proj; }))
            return h;
    }
    return std::nullopt;
}

std::optional<unsigned> is_projective(const AdmissibleMap& map) { return is_projective(map.family); }

std::uint32_t subset_word(SubsetMask s, unsigned m) { return ~s & ((1u << m) - 1); }

std::vector<SubsetMask> filter_set_K(const PhiFamily& family, std::size_t j, Sign sigma) {
    const BoolFn f = family.fn(j, sigma);
    std::vector<SubsetMask> k;
    for (SubsetMask s = 0; s < (1u << family.m); ++s)
        if (f(subset_word(s, family.m)) == Sign::Plus) k.push_back(s);
    return k;
}

ProductCheck product_bijection_check(const Arrangement& a1, const Arrangement& a2, unsigned m,
                                     const AdmissibleOptions& options) {
    const Arrangement sum = direct_sum(a1, a2);
    ChamberOptions copts;
    copts.exec = options.exec;
    const auto ch1 = enumerate_chambers(a1, copts);
    const auto ch2 = enumerate_chambers(a2, copts);
    const auto chs = enumerate_chambers(sum, copts);

    ProductCheck result;
    const auto am1 = enumerate_admissible(ch1, m, options);
    const auto am2 = enumerate_admissible(ch2, m, options);
    const auto ams = enumerate_admissible(chs, m, options);
    result.count_first = am1.size();
    result.count_second = am2.size();
    result.count_sum = ams.size();

    // Chambers of the sum are exactly the concatenated pairs of chambers.
    const std::size_t n1 = a1.size();
    if (chs->size() != ch1->size() * ch2->size()) return result;
    for (const auto& c : chs->chambers()) {
        const std::uint64_t lo = c.address.bits() & ((std::uint64_t{1} << n1) - 1);
        const std::uint64_t hi = c.address.bits() >> n1;
        if (!ch1->contains_bits(lo) || !ch2->contains_bits(hi)) return result;
    }

    using Tables = std::vector<std::uint64_t>;
    auto tables_of = [](const PhiFamily& f, std::size_t from, std::size_t to) {
        Tables t;
        for (std::size_t j = from; j < to; ++j) t.push_back(f.plus_fns[j].table());
        return t;
    };
    std::set<Tables> set1, set2;
    for (const auto& mp : am1) set1.insert(tables_of(mp.family, 0, a1.size()));
    for (const auto& mp : am2) set2.insert(tables_of(mp.family, 0, a2.size()));

    // F: restriction to the two blocks must land in AM(A1) x AM(A2) injectively.
    std::set<std::pair<Tables, Tables>> images;
    for (const auto& mp : ams) {
        auto p = std::make_pair(tables_of(mp.family, 0, n1), tables_of(mp.family, n1, sum.size()));
        if (!set1.count(p.first) || !set2.count(p.second)) return result;
        if (!images.insert(std::move(p)).second) return result;
    }
    if (images.size() != set1.size() * set2.size()) return result;

    // G: every concatenation is admissible for the sum.
    for (const auto& mp1 : am1)
        for (const auto& mp2 : am2) {
            PhiFamily joined{m, mp1.family.plus_fns};
            joined.plus_fns.insert(joined.plus_fns.end(), mp2.family.plus_fns.begin(), mp2.family.plus_fns.end());
            if (!is_admissible(*chs, joined, options.max_tuples)) return result;
        }
    result.bijective = true;
    return result;
}

}  // namespace hyperarr
