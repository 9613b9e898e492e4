#include "hyperarr/arrangement.hpp"

#include <algorithm>
#include <json.hpp>

#include "hyperarr/errors.hpp"
#include "hyperarr/linalg.hpp"

namespace hyperarr {

using nlohmann::json;

bool LinearForm::is_zero() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& c) { return c == 0; });
}

Rational LinearForm::evaluate(const std::vector<Rational>& x) const {
    Rational s = 0;
    for (std::size_t i = 0; i < coeffs.size(); ++i) s += coeffs[i] * x[i];
    return s;
}

LinearForm LinearForm::negated() const {
    LinearForm f = *this;
    for (auto& c : f.coeffs) c = -c;
    return f;
}

namespace {

// Scales so that the first nonzero coefficient is 1; equal results <=> proportional.
std::vector<Rational> projective_key(const LinearForm& f) {
    std::vector<Rational> key = f.coeffs;
    auto it = std::find_if(key.begin(), key.end(), [](const Rational& c) { return c != 0; });
    const Rational lead = *it;
    for (auto& c : key) c /= lead;
    return key;
}

}  // namespace

Arrangement::Arrangement(std::size_t dim, std::vector<LinearForm> forms,
                         std::vector<std::string> labels)
    : dim_(dim), forms_(std::move(forms)), labels_(std::move(labels)) {
    if (dim_ == 0) throw Error(ErrorKind::DimensionMismatch, "dimension must be positive");
    if (forms_.empty()) throw Error(ErrorKind::MalformedInput, "arrangement must contain at least one hyperplane");
    for (std::size_t j = 0; j < forms_.size(); ++j) {
        if (forms_[j].dim() != dim_)
            throw Error(ErrorKind::DimensionMismatch,
                        "form " + std::to_string(j + 1) + " has " + std::to_string(forms_[j].dim()) +
                            " coefficients, expected " + std::to_string(dim_));
        if (forms_[j].is_zero()) throw Error(ErrorKind::ZeroForm, "form " + std::to_string(j + 1) + " is zero");
    }
    std::vector<std::vector<Rational>> keys;
    keys.reserve(forms_.size());
    for (const auto& f : forms_) keys.push_back(projective_key(f));
    for (std::size_t a = 0; a < keys.size(); ++a)
        for (std::size_t b = a + 1; b < keys.size(); ++b)
            if (keys[a] == keys[b])
                throw Error(ErrorKind::DuplicateHyperplane,
                            "forms " + std::to_string(a + 1) + " and " + std::to_string(b + 1) +
                                " define the same hyperplane");

    if (labels_.empty()) {
        for (std::size_t j = 0; j < forms_.size(); ++j) labels_.push_back("H" + std::to_string(j + 1));
    } else if (labels_.size() != forms_.size()) {
        throw Error(ErrorKind::LengthMismatch, "labels and forms differ in length");
    }
}

const LinearForm& Arrangement::form(std::size_t j) const {
    if (j >= forms_.size()) throw Error(ErrorKind::IndexOutOfRange, "hyperplane index " + std::to_string(j));
    return forms_[j];
}

const std::string& Arrangement::label(std::size_t j) const {
    if (j >= labels_.size()) throw Error(ErrorKind::IndexOutOfRange, "hyperplane index " + std::to_string(j));
    return labels_[j];
}

Arrangement Arrangement::restrict_to(const std::vector<std::size_t>& indices) const {
    std::vector<LinearForm> f;
    std::vector<std::string> l;
    for (auto j : indices) {
        f.push_back(form(j));
        l.push_back(labels_[j]);
    }
    return Arrangement(dim_, std::move(f), std::move(l));
}

Arrangement Arrangement::with_flipped(std::size_t j) const {
    auto f = forms_;
    f.at(j) = f[j].negated();
    return Arrangement(dim_, std::move(f), labels_);
}

Arrangement Arrangement::permuted(const std::vector<std::size_t>& perm) const {
    if (perm.size() != forms_.size()) throw Error(ErrorKind::LengthMismatch, "permutation length");
    return restrict_to(perm);
}

std::optional<std::size_t> Arrangement::braid_ell() const {
    const std::size_t ell = dim_;
    if (ell < 2 || forms_.size() != ell * (ell - 1) / 2) return std::nullopt;
    std::size_t k = 0;
    for (std::size_t i = 0; i < ell; ++i)
        for (std::size_t j = i + 1; j < ell; ++j, ++k)
            for (std::size_t c = 0; c < ell; ++c) {
                const int want = c == i ? 1 : (c == j ? -1 : 0);
                if (forms_[k].coeffs[c] != want) return std::nullopt;
            }
    return ell;
}

bool operator==(const Arrangement& a, const Arrangement& b) {
    if (a.dim_ != b.dim_ || a.labels_ != b.labels_ || a.forms_.size() != b.forms_.size()) return false;
    for (std::size_t j = 0; j < a.forms_.size(); ++j)
        if (a.forms_[j].coeffs != b.forms_[j].coeffs) return false;
    return true;
}

Arrangement parse_arrangement(std::string_view json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::MalformedInput, e.what());
    }
    if (!doc.is_object() || !doc.contains("dim") || !doc.contains("forms"))
        throw Error(ErrorKind::MalformedInput, "expected an object with \"dim\" and \"forms\"");
    if (!doc["dim"].is_number_integer() || doc["dim"].get<long long>() <= 0)
        throw Error(ErrorKind::DimensionMismatch, "\"dim\" must be a positive integer");
    const auto dim = doc["dim"].get<std::size_t>();
    if (!doc["forms"].is_array()) throw Error(ErrorKind::MalformedInput, "\"forms\" must be an array");

    std::vector<LinearForm> forms;
    for (const auto& row : doc["forms"]) {
        if (!row.is_array()) throw Error(ErrorKind::MalformedInput, "each form must be an array");
        LinearForm f;
        for (const auto& entry : row) {
            if (!entry.is_string()) throw Error(ErrorKind::MalformedRational, "coefficients must be strings");
            f.coeffs.push_back(parse_rational(entry.get<std::string>()));
        }
        forms.push_back(std::move(f));
    }
    std::vector<std::string> labels;
    if (doc.contains("labels")) {
        if (!doc["labels"].is_array()) throw Error(ErrorKind::MalformedInput, "\"labels\" must be an array");
        for (const auto& l : doc["labels"]) {
            if (!l.is_string()) throw Error(ErrorKind::MalformedInput, "labels must be strings");
            labels.push_back(l.get<std::string>());
        }
    }
    return Arrangement(dim, std::move(forms), std::move(labels));
}

std::string serialize_arrangement(const Arrangement& a) {
    json forms = json::array();
    for (const auto& f : a.forms()) {
        json row = json::array();
        for (const auto& c : f.coeffs) row.push_back(format_rational(c));
        forms.push_back(std::move(row));
    }
    json doc = {{"dim", a.dim()}, {"forms", std::move(forms)}, {"labels", a.labels()}};
    return doc.dump();
}

Arrangement builtin_braid(std::size_t ell) {
    if (ell < 2) throw Error(ErrorKind::MalformedInput, "braid arrangement needs ell >= 2");
    std::vector<LinearForm> forms;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < ell; ++i)
        for (std::size_t j = i + 1; j < ell; ++j) {
            LinearForm f{std::vector<Rational>(ell, Rational(0))};
            f.coeffs[i] = 1;
            f.coeffs[j] = -1;
            forms.push_back(std::move(f));
            labels.push_back("H" + std::to_string(i + 1) + std::to_string(j + 1));
        }
    return Arrangement(ell, std::move(forms), std::move(labels));
}

Arrangement builtin_boolean(std::size_t d) {
    if (d < 1) throw Error(ErrorKind::MalformedInput, "boolean arrangement needs d >= 1");
    std::vector<LinearForm> forms;
    for (std::size_t i = 0; i < d; ++i) {
        LinearForm f{std::vector<Rational>(d, Rational(0))};
        f.coeffs[i] = 1;
        forms.push_back(std::move(f));
    }
    return Arrangement(d, std::move(forms));
}

Arrangement direct_sum(const Arrangement& a1, const Arrangement& a2) {
    const std::size_t dim = a1.dim() + a2.dim();
    std::vector<LinearForm> forms;
    std::vector<std::string> labels;
    for (std::size_t j = 0; j < a1.size(); ++j) {
        LinearForm f{std::vector<Rational>(dim, Rational(0))};
        std::copy(a1.form(j).coeffs.begin(), a1.form(j).coeffs.end(), f.coeffs.begin());
        forms.push_back(std::move(f));
        labels.push_back(a1.label(j));
    }
    for (std::size_t j = 0; j < a2.size(); ++j) {
        LinearForm f{std::vector<Rational>(dim, Rational(0))};
        std::copy(a2.form(j).coeffs.begin(), a2.form(j).coeffs.end(), f.coeffs.begin() + a1.dim());
        forms.push_back(std::move(f));
        labels.push_back(a2.label(j));
    }
    // Labels may collide between the summands; fall back to positional names.
    std::vector<std::string> sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) labels.clear();
    return Arrangement(dim, std::move(forms), std::move(labels));
}

std::size_t rank(const Arrangement& a, const std::vector<std::size_t>& subset) {
    linalg::Matrix rows;
    for (auto j : subset) rows.push_back(a.form(j).coeffs);
    return linalg::rank(std::move(rows));
}

std::size_t rank_mask(const Arrangement& a, std::uint64_t subset) {
    if (a.size() < 64 && (subset >> a.size()) != 0)
        throw Error(ErrorKind::IndexOutOfRange, "subset mask exceeds arrangement size");
    linalg::Matrix rows;
    for (std::size_t j = 0; j < a.size() && j < 64; ++j)
        if ((subset >> j) & 1u) rows.push_back(a.form(j).coeffs);
    return linalg::rank(std::move(rows));
}

std::size_t rank(const Arrangement& a) {
    linalg::Matrix rows;
    for (const auto& f : a.forms()) rows.push_back(f.coeffs);
    return linalg::rank(std::move(rows));
}

}  // namespace hyperarr
