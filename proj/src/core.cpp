#include "nfl/core.hpp"

#include <algorithm>
#include <sstream>

#include "nfl/combinatorics.hpp"

namespace nfl {

namespace {

template <class Range>
std::string bracketed(const Range& r) {
    std::ostringstream os;
    os << '[';
    bool first = true;
    for (const auto& v : r) {
        if (!first) os << ',';
        os << v;
        first = false;
    }
    os << ']';
    return os.str();
}

}  // namespace

SpaceSignature::SpaceSignature(std::size_t domain, std::size_t codomain)
    : domain_size(domain), codomain_size(codomain) {
    if (domain == 0 || codomain == 0)
        throw InvalidArgument("space signature needs |X| >= 1 and |Y| >= 1, got " + to_string());
}

std::optional<std::uint64_t> SpaceSignature::function_count(std::uint64_t cap) const {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < domain_size; ++i) {
        if (count > cap / codomain_size) return std::nullopt;
        count *= codomain_size;
    }
    if (count > cap) return std::nullopt;
    return count;
}

std::string SpaceSignature::to_string() const {
    return "(" + std::to_string(domain_size) + "," + std::to_string(codomain_size) + ")";
}

FiniteFunction::FiniteFunction(SpaceSignature sig, std::vector<Value> values)
    : sig_(sig), values_(std::move(values)) {
    if (values_.size() != sig_.domain_size)
        throw SignatureMismatch("function has " + std::to_string(values_.size()) +
                                " values but |X| = " + std::to_string(sig_.domain_size));
    for (Value v : values_)
        if (v >= sig_.codomain_size)
            throw InvalidArgument("value " + std::to_string(v) + " outside [0," +
                                  std::to_string(sig_.codomain_size) + ")");
}

std::string FiniteFunction::to_string() const { return bracketed(values_); }

Permutation::Permutation(std::vector<Point> mapping) : mapping_(std::move(mapping)) {
    std::vector<bool> seen(mapping_.size(), false);
    for (Point p : mapping_) {
        if (p >= mapping_.size() || seen[p])
            throw InvalidArgument("not a permutation: " + bracketed(mapping_));
        seen[p] = true;
    }
}

Permutation Permutation::identity(std::size_t n) {
    std::vector<Point> m(n);
    for (std::size_t i = 0; i < n; ++i) m[i] = static_cast<Point>(i);
    return Permutation(std::move(m));
}

Permutation Permutation::inverse() const {
    std::vector<Point> inv(mapping_.size());
    for (std::size_t i = 0; i < mapping_.size(); ++i) inv[mapping_[i]] = static_cast<Point>(i);
    return Permutation(std::move(inv));
}

std::string Permutation::to_string() const { return bracketed(mapping_); }

Histogram::Histogram(SpaceSignature sig, std::vector<std::size_t> counts)
    : sig_(sig), counts_(std::move(counts)) {
    if (counts_.size() != sig_.codomain_size)
        throw SignatureMismatch("histogram has " + std::to_string(counts_.size()) +
                                " bins but |Y| = " + std::to_string(sig_.codomain_size));
    std::size_t total = 0;
    for (auto c : counts_) total += c;
    if (total != sig_.domain_size)
        throw InvalidArgument("histogram " + bracketed(counts_) + " does not sum to |X| = " +
                              std::to_string(sig_.domain_size));
}

FiniteFunction Histogram::canonical_function() const {
    std::vector<Value> values;
    values.reserve(sig_.domain_size);
    for (std::size_t y = 0; y < counts_.size(); ++y)
        values.insert(values.end(), counts_[y], static_cast<Value>(y));
    return FiniteFunction(sig_, std::move(values));
}

std::string Histogram::to_string() const { return bracketed(counts_); }

bool HistogramOrder::operator()(const Histogram& a, const Histogram& b) const {
    return std::lexicographical_compare(b.counts().begin(), b.counts().end(), a.counts().begin(),
                                        a.counts().end());
}

FunctionSet::FunctionSet(SpaceSignature sig) : sig_(sig) {}

FunctionSet::FunctionSet(SpaceSignature sig, std::vector<FiniteFunction> members)
    : sig_(sig), members_(std::move(members)) {
    for (const auto& f : members_)
        if (f.signature() != sig_)
            throw SignatureMismatch("member " + f.to_string() + " has signature " +
                                    f.signature().to_string() + ", set has " + sig_.to_string());
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool FunctionSet::contains(const FiniteFunction& f) const {
    return std::binary_search(members_.begin(), members_.end(), f);
}

bool FunctionSet::is_subset_of(const FunctionSet& other) const {
    return sig_ == other.sig_ && std::includes(other.members_.begin(), other.members_.end(),
                                               members_.begin(), members_.end());
}

FunctionSet FunctionSet::merged_with(const FunctionSet& other) const {
    if (sig_ != other.sig_)
        throw SignatureMismatch("cannot merge sets over " + sig_.to_string() + " and " +
                                other.sig_.to_string());
    std::vector<FiniteFunction> all;
    all.reserve(members_.size() + other.members_.size());
    std::set_union(members_.begin(), members_.end(), other.members_.begin(), other.members_.end(),
                   std::back_inserter(all));
    FunctionSet out(sig_);
    out.members_ = std::move(all);
    return out;
}

FiniteFunction compose(const FiniteFunction& f, const Permutation& p) {
    if (f.size() != p.size())
        throw SignatureMismatch("cannot compose function over |X| = " + std::to_string(f.size()) +
                                " with permutation of size " + std::to_string(p.size()));
    std::vector<Value> out(f.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = f[p[i]];
    return FiniteFunction(f.signature(), std::move(out));
}

Permutation compose(const Permutation& p, const Permutation& q) {
    if (p.size() != q.size())
        throw SignatureMismatch("permutation sizes differ: " + std::to_string(p.size()) + " vs " +
                                std::to_string(q.size()));
    std::vector<Point> out(p.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = p[q[i]];
    return Permutation(std::move(out));
}

Histogram histogram_of(const FiniteFunction& f) {
    std::vector<std::size_t> counts(f.signature().codomain_size, 0);
    for (Value v : f.values()) ++counts[v];
    return Histogram(f.signature(), std::move(counts));
}

std::optional<Permutation> find_permutation(const FiniteFunction& f, const FiniteFunction& g) {
    if (f.signature() != g.signature())
        throw SignatureMismatch("find_permutation over " + f.signature().to_string() + " and " +
                                g.signature().to_string());
    if (histogram_of(f) != histogram_of(g)) return std::nullopt;

    // Preimages of f, each in ascending point order.
    std::vector<std::vector<Point>> preimage(f.signature().codomain_size);
    for (std::size_t x = 0; x < f.size(); ++x) preimage[f[x]].push_back(static_cast<Point>(x));

    std::vector<std::size_t> next(preimage.size(), 0);
    std::vector<Point> mapping(f.size());
    for (std::size_t x = 0; x < g.size(); ++x) {
        const Value y = g[x];
        mapping[x] = preimage[y][next[y]++];
    }
    return Permutation(std::move(mapping));
}

FunctionSet orbit(const FiniteFunction& f, const Limits& limits) {
    const auto& sig = f.signature();
    if (sig.domain_size > limits.max_orbit_domain)
        throw CapacityError("orbit enumeration limited to |X| <= " +
                            std::to_string(limits.max_orbit_domain) + ", got |X| = " +
                            std::to_string(sig.domain_size));
    const Histogram h = histogram_of(f);
    if (multinomial(h) > limits.enumeration_cap)
        throw CapacityError("orbit of histogram " + h.to_string() + " exceeds enumeration cap " +
                            std::to_string(limits.enumeration_cap));
    std::vector<FiniteFunction> members;
    for_each_rearrangement(h, [&](std::span<const Value> values) {
        members.emplace_back(sig, std::vector<Value>(values.begin(), values.end()));
        return true;
    });
    return FunctionSet(sig, std::move(members));
}

FunctionRange::iterator& FunctionRange::iterator::operator++() {
    // Odometer with the last position varying fastest.
    for (std::size_t i = values_.size(); i-- > 0;) {
        if (++values_[i] < sig_.codomain_size) return *this;
        values_[i] = 0;
    }
    done_ = true;
    return *this;
}

FunctionRange enumerate_functions(SpaceSignature sig, const Limits& limits) {
    auto count = sig.function_count(limits.enumeration_cap);
    if (!count)
        throw CapacityError("|Y|^|X| for " + sig.to_string() + " exceeds enumeration cap " +
                            std::to_string(limits.enumeration_cap));
    return FunctionRange(sig, *count);
}

FunctionSet full_space(SpaceSignature sig, const Limits& limits) {
    std::vector<FiniteFunction> all;
    auto range = enumerate_functions(sig, limits);
    all.reserve(range.size());
    for (auto f : range) all.push_back(std::move(f));
    return FunctionSet(sig, std::move(all));
}

HistogramRange::iterator::iterator(SpaceSignature sig) : sig_(sig), counts_(sig.codomain_size, 0) {
    counts_[0] = sig.domain_size;
}

HistogramRange::iterator& HistogramRange::iterator::operator++() {
    // Move one unit of mass from the last non-empty bin before the tail into
    // its right neighbour, then gather the whole tail there.
    const std::size_t m = counts_.size();
    for (std::size_t i = m - 1; i-- > 0;) {
        if (counts_[i] == 0) continue;
        std::size_t tail = 0;
        for (std::size_t j = i + 1; j < m; ++j) {
            tail += counts_[j];
            counts_[j] = 0;
        }
        --counts_[i];
        counts_[i + 1] = tail + 1;
        return *this;
    }
    done_ = true;
    return *this;
}

}  // namespace nfl
