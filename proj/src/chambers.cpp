#include "hyperarr/chambers.hpp"

#include <algorithm>
#include <bit>

#include "hyperarr/errors.hpp"
#include "hyperarr/feasibility.hpp"
#include "hyperarr/kernels.hpp"
#include "hyperarr/matroid.hpp"

namespace hyperarr {

namespace {

std::uint64_t low_mask(std::size_t n) { return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

constexpr std::size_t kDenseLookupMaxN = 20;

}  // namespace

SignVector::SignVector(std::size_t n, std::uint64_t bits) : n_(n), bits_(bits & low_mask(n)) {
    if (n > kMaxSignVectorLength)
        throw Error(ErrorKind::ResourceLimit, "sign vectors longer than 64 are not supported");
}

SignVector SignVector::parse(std::string_view text) {
    std::uint64_t bits = 0;
    for (std::size_t j = 0; j < text.size(); ++j) {
        if (text[j] == '-')
            bits |= std::uint64_t{1} << j;
        else if (text[j] != '+')
            throw Error(ErrorKind::MalformedInput, "sign vector must be a word over \"+-\"");
    }
    return SignVector(text.size(), bits);
}

SignVector SignVector::uniform(std::size_t n, Sign s) {
    return SignVector(n, s == Sign::Plus ? 0 : low_mask(n));
}

SignVector SignVector::with(std::size_t j, Sign s) const {
    const std::uint64_t bit = std::uint64_t{1} << j;
    return SignVector(n_, s == Sign::Minus ? (bits_ | bit) : (bits_ & ~bit));
}

SignVector SignVector::operator-() const noexcept {
    SignVector v = *this;
    v.bits_ = ~bits_ & low_mask(n_);
    return v;
}

std::string SignVector::to_string() const {
    std::string s(n_, '+');
    for (std::size_t j = 0; j < n_; ++j) s[j] = to_char((*this)[j]);
    return s;
}

std::strong_ordering operator<=>(const SignVector& a, const SignVector& b) {
    if (a.n_ != b.n_) return a.n_ <=> b.n_;
    const std::uint64_t diff = a.bits_ ^ b.bits_;
    if (diff == 0) return std::strong_ordering::equal;
    const auto first = std::countr_zero(diff);
    return ((a.bits_ >> first) & 1u) ? std::strong_ordering::greater : std::strong_ordering::less;
}

ChamberSet::ChamberSet(std::shared_ptr<const Arrangement> arrangement, std::vector<SignVector> addresses)
    : arrangement_(std::move(arrangement)) {
    std::sort(addresses.begin(), addresses.end());
    if (std::adjacent_find(addresses.begin(), addresses.end()) != addresses.end())
        throw Error(ErrorKind::InternalInconsistency, "duplicate chamber address");
    const std::size_t n = arrangement_->size();
    chambers_.reserve(addresses.size());
    for (std::size_t id = 0; id < addresses.size(); ++id) {
        if (addresses[id].size() != n) throw Error(ErrorKind::LengthMismatch, "chamber address length");
        chambers_.push_back(Chamber{id, addresses[id]});
    }
    if (n <= kDenseLookupMaxN) {
        dense_.assign(std::size_t{1} << n, -1);
        for (const auto& c : chambers_) dense_[c.address.bits()] = static_cast<std::int32_t>(c.id);
    } else {
        for (const auto& c : chambers_) index_.emplace(c.address.bits(), c.id);
    }
}

std::optional<std::size_t> ChamberSet::find(const SignVector& v) const {
    if (v.size() != arrangement_->size()) return std::nullopt;
    return find_bits(v.bits());
}

const Chamber& ChamberSet::antipode(const Chamber& c) const {
    const auto id = find(-c.address);
    if (!id) throw Error(ErrorKind::InternalInconsistency, "chamber set is not closed under antipodes");
    return chambers_[*id];
}

linalg::Matrix oriented_rows(const Arrangement& a, const SignVector& v) {
    linalg::Matrix rows;
    rows.reserve(v.size());
    for (std::size_t j = 0; j < v.size(); ++j)
        rows.push_back(v[j] == Sign::Plus ? a.form(j).coeffs : a.form(j).negated().coeffs);
    return rows;
}

std::optional<std::vector<Rational>> realizing_point(const Arrangement& a, const SignVector& v) {
    if (v.size() != a.size())
        throw Error(ErrorKind::LengthMismatch,
                    "sign vector has length " + std::to_string(v.size()) + ", arrangement has " +
                        std::to_string(a.size()) + " hyperplanes");
    return find_point_with_margin(oriented_rows(a, v), a.dim());
}

bool is_realizable(const Arrangement& a, const SignVector& v) { return realizing_point(a, v).has_value(); }

std::shared_ptr<const ChamberSet> enumerate_chambers(const Arrangement& a, const ChamberOptions& options) {
    return enumerate_chambers(std::make_shared<const Arrangement>(a), options);
}

std::shared_ptr<const ChamberSet> enumerate_chambers(std::shared_ptr<const Arrangement> a,
                                                     const ChamberOptions& options) {
    if (a->size() > kMaxSignVectorLength)
        throw Error(ErrorKind::ResourceLimit, "chamber enumeration supports at most 64 hyperplanes");

    // Level 0: the whole space, witnessed by the origin.
    std::vector<kernels::WitnessedChamber> level{{0, std::vector<Rational>(a->dim(), Rational(0))}};
    for (std::size_t k = 0; k < a->size(); ++k) {
        level = options.exec == Exec::Parallel ? kernels::extend_chambers_parallel(*a, k, level)
                                               : kernels::extend_chambers_serial(*a, k, level);
        if (level.size() > options.max_chambers)
            throw Error(ErrorKind::ResourceLimit, "more than " + std::to_string(options.max_chambers) +
                                                      " chambers after " + std::to_string(k + 1) +
                                                      " hyperplanes");
    }
    std::vector<SignVector> addresses;
    addresses.reserve(level.size());
    for (const auto& c : level) addresses.emplace_back(a->size(), c.bits);
    return std::make_shared<const ChamberSet>(std::move(a), std::move(addresses));
}

std::shared_ptr<const ChamberSet> enumerate_chambers_bruteforce(const Arrangement& a) {
    if (a.size() > 16) throw Error(ErrorKind::ResourceLimit, "brute-force enumeration needs n <= 16");
    std::vector<SignVector> addresses;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << a.size()); ++bits) {
        SignVector v(a.size(), bits);
        if (is_realizable(a, v)) addresses.push_back(v);
    }
    return std::make_shared<const ChamberSet>(std::make_shared<const Arrangement>(a), std::move(addresses));
}

Sign epsilon(const ChamberSet& chambers, std::size_t j, Sign sigma, const Chamber& ch) {
    if (j >= chambers.arrangement().size())
        throw Error(ErrorKind::IndexOutOfRange, "hyperplane index " + std::to_string(j));
    return sigma * ch.address[j];
}

std::vector<Sign> epsilon_tuple(const ChamberSet& chambers, std::size_t j, Sign sigma,
                                std::span<const Chamber> tuple) {
    std::vector<Sign> word;
    word.reserve(tuple.size());
    for (const auto& c : tuple) word.push_back(epsilon(chambers, j, sigma, c));
    return word;
}

std::pair<SignVector, SignVector> circuit_missing_signs(const Arrangement& a,
                                                        const std::vector<std::size_t>& circuit) {
    if (!is_circuit(a, circuit)) throw Error(ErrorKind::NotACircuit, "index set is not a circuit");
    const Arrangement sub = a.restrict_to(circuit);
    const auto chambers = enumerate_chambers(sub);
    std::vector<SignVector> missing;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << sub.size()); ++bits)
        if (!chambers->contains_bits(bits)) missing.emplace_back(sub.size(), bits);
    if (missing.size() != 2 || missing[0] != -missing[1])
        throw Error(ErrorKind::InternalInconsistency, "circuit does not miss exactly one antipodal pair");
    if (missing[1] < missing[0]) std::swap(missing[0], missing[1]);
    return {missing[0], missing[1]};
}

std::string permutation_label(std::size_t ell, const SignVector& address) {
    if (address.size() != ell * (ell - 1) / 2) throw Error(ErrorKind::LengthMismatch, "not a braid address");
    // below[i] counts the coordinates smaller than x_i; it is the position of i in the order.
    std::vector<std::size_t> below(ell, 0);
    std::size_t k = 0;
    for (std::size_t i = 0; i < ell; ++i)
        for (std::size_t j = i + 1; j < ell; ++j, ++k)
            ++below[address[k] == Sign::Plus ? i : j];
    std::vector<std::size_t> order(ell, ell);
    for (std::size_t i = 0; i < ell; ++i) {
        if (below[i] >= ell || order[below[i]] != ell)
            throw Error(ErrorKind::InternalInconsistency, "address is not a total order");
        order[below[i]] = i;
    }
    std::string label;
    for (std::size_t p = 0; p < ell; ++p) {
        if (p) label += '<';
        label += "x" + std::to_string(order[p] + 1);
    }
    return label;
}

}  // namespace hyperarr
