#include "zmcode/decoder.hpp"

#include "zmcode/errors.hpp"

#include <algorithm>
#include <string>

namespace zmcode {

namespace {

std::string to_text(const Vector& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(v[i]);
    }
    return out;
}

} // namespace

bool Syndrome::is_zero() const noexcept {
    return std::all_of(values.begin(), values.end(), [](Word v) { return v == 0; });
}

std::size_t SyndromeHash::operator()(const Syndrome& s) const noexcept {
    // FNV-1a over the residues.
    std::uint64_t h = 1469598103934665603ull;
    for (Word v : s.values) {
        h ^= v;
        h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
}

Syndrome syndrome(const Matrix& h, std::span<const Word> x) {
    if (x.size() != h.cols()) {
        throw DimensionMismatch("received word has length " + std::to_string(x.size()) + ", code length is " +
                                std::to_string(h.cols()));
    }
    return Syndrome{mat_vec(h, x)};
}

Syndrome syndrome(const ControlMatrix& h, std::span<const Word> x) { return syndrome(h.matrix(), x); }

bool is_codeword(const ControlMatrix& h, std::span<const Word> x) { return syndrome(h, x).is_zero(); }

std::optional<std::uint64_t> low_weight_count(std::size_t n, std::size_t t, Word m) noexcept {
    std::uint64_t total = 0;
    std::uint64_t binom = 1; // C(n, w)
    for (std::size_t w = 0; w <= std::min(t, n); ++w) {
        if (w > 0) {
            // C(n, w) = C(n, w−1)·(n − w + 1)/w, exact at each step.
            const std::uint64_t num = n - w + 1;
            if (binom > UINT64_MAX / num) return std::nullopt;
            binom = binom * num / w;
        }
        const auto symbols = checked_pow(m - 1, w);
        if (!symbols || (*symbols != 0 && binom > UINT64_MAX / *symbols)) return std::nullopt;
        const std::uint64_t term = binom * *symbols;
        if (total > UINT64_MAX - term) return std::nullopt;
        total += term;
    }
    return total;
}

void for_each_low_weight(std::size_t n, std::size_t t, const RingSpec& ring,
                         const std::function<bool(const Vector&)>& visit) {
    const Word m = ring.modulus();
    Vector e(n, 0);
    if (!visit(e)) return;
    for (std::size_t w = 1; w <= std::min(t, n); ++w) {
        std::vector<std::size_t> support(w);
        for (std::size_t i = 0; i < w; ++i) support[i] = i;
        for (;;) {
            Vector symbols(w, 1);
            for (;;) {
                for (std::size_t i = 0; i < w; ++i) e[support[i]] = symbols[i];
                if (!visit(e)) return;
                std::size_t i = w;
                while (i-- > 0) {
                    if (++symbols[i] < m) break;
                    symbols[i] = 1;
                }
                if (i == static_cast<std::size_t>(-1)) break;
            }
            for (std::size_t i : support) e[i] = 0;

            // Next w-subset of [0, n) in lexicographic order.
            std::size_t i = w;
            while (i-- > 0 && support[i] == n - w + i) {
            }
            if (i == static_cast<std::size_t>(-1)) break;
            ++support[i];
            for (std::size_t j = i + 1; j < w; ++j) support[j] = support[j - 1] + 1;
        }
    }
}

std::vector<Vector> enumerate_low_weight(std::size_t n, std::size_t t, const RingSpec& ring) {
    std::vector<Vector> out;
    for_each_low_weight(n, t, ring, [&](const Vector& e) {
        out.push_back(e);
        return true;
    });
    return out;
}

const Vector* SyndromeTable::find(const Syndrome& s) const {
    const auto it = leaders_.find(s);
    if (it == leaders_.end() || !it->second) return nullptr;
    return &*it->second;
}

bool SyndromeTable::is_ambiguous(const Syndrome& s) const {
    const auto it = leaders_.find(s);
    return it != leaders_.end() && !it->second;
}

std::vector<std::pair<Syndrome, std::optional<Vector>>> SyndromeTable::entries() const {
    std::vector<std::pair<Syndrome, std::optional<Vector>>> out(leaders_.begin(), leaders_.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

SyndromeTable build_table(const Matrix& h, std::size_t t, CollisionPolicy policy, std::uint64_t max_entries) {
    const std::size_t n = h.cols();
    const RingSpec ring(h.modulus());
    const auto count = low_weight_count(n, t, ring.modulus());
    if (!count || *count > max_entries) {
        throw CapExceeded("syndrome table for t = " + std::to_string(t) + " needs " +
                          (count ? std::to_string(*count) : std::string("more than 2^64")) +
                          " entries, cap is " + std::to_string(max_entries));
    }
    SyndromeTable table;
    table.t_ = t;
    table.n_ = n;
    table.leaders_.reserve(*count);
    for_each_low_weight(n, t, ring, [&](const Vector& e) {
        Syndrome s = syndrome(h, e);
        auto [it, inserted] = table.leaders_.try_emplace(std::move(s), e);
        if (inserted) return true;
        if (policy == CollisionPolicy::kReject) {
            throw DuplicateSyndrome("error patterns " + (it->second ? to_text(*it->second) : std::string("?")) +
                                    " and " + to_text(e) + " share syndrome " + to_text(it->first.values) +
                                    "; t = " + std::to_string(t) + " exceeds the correction capacity");
        }
        if (it->second) {
            it->second.reset();
            ++table.ambiguous_;
        }
        return true;
    });
    return table;
}

SyndromeTable build_table(const ControlMatrix& h, std::size_t t, CollisionPolicy policy, std::uint64_t max_entries) {
    return build_table(h.matrix(), t, policy, max_entries);
}

std::string Failure::message() const {
    switch (reason) {
    case Reason::kAmbiguous:
        return "ambiguous syndrome: several error patterns of weight <= t";
    case Reason::kTooManyErrors:
        break;
    }
    return "more than t errors";
}

DecodeOutcome decode(const SyndromeTable& table, const ControlMatrix& h, std::span<const Word> received) {
    const Syndrome s = syndrome(h, received);
    const Vector* e = table.find(s);
    if (e == nullptr) {
        return Failure{table.is_ambiguous(s) ? Failure::Reason::kAmbiguous : Failure::Reason::kTooManyErrors};
    }
    const RingSpec ring(h.modulus());
    Corrected out{Vector(received.size()), *e};
    for (std::size_t i = 0; i < received.size(); ++i) out.codeword[i] = ring.sub(ring.reduce(received[i]), (*e)[i]);
    if (!is_codeword(h, out.codeword)) throw InternalError("decoded word has a nonzero syndrome");
    return out;
}

} // namespace zmcode
