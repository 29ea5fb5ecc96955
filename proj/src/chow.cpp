#include "schubert/chow.hpp"

#include <cctype>
#include <charconv>
#include <set>

namespace schubert {

namespace {

void check_s(int s) {
    if (s < 1) throw InvalidArgument("embedding needs s >= 1, got s=" + std::to_string(s));
}

std::string_view trim(std::string_view t) {
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.remove_prefix(1);
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.remove_suffix(1);
    return t;
}

}  // namespace

CycleClass::CycleClass(const Partition& lambda, std::int64_t coeff) : box_(lambda.box()) {
    add_term(lambda, coeff);
}

std::int64_t CycleClass::coefficient(const Partition& lambda) const {
    auto it = terms_.find(lambda);
    return it == terms_.end() ? 0 : it->second;
}

bool CycleClass::homogeneous() const {
    std::set<int> grades;
    for (const auto& [p, k] : terms_) grades.insert(weight(p));
    return grades.size() <= 1;
}

void CycleClass::add_term(const Partition& lambda, std::int64_t coeff) {
    if (lambda.box() != box_) {
        throw InvalidArgument("box mismatch: term in " + lambda.box().to_string() +
                              ", class in " + box_.to_string());
    }
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(lambda, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

void CycleClass::require_same_box(const CycleClass& other) const {
    if (other.box_ != box_) {
        throw InvalidArgument("box mismatch: " + box_.to_string() + " vs " +
                              other.box_.to_string());
    }
}

CycleClass& CycleClass::operator+=(const CycleClass& other) {
    require_same_box(other);
    for (const auto& [p, k] : other.terms_) add_term(p, k);
    return *this;
}

CycleClass& CycleClass::operator-=(const CycleClass& other) {
    require_same_box(other);
    for (const auto& [p, k] : other.terms_) add_term(p, -k);
    return *this;
}

CycleClass& CycleClass::operator*=(std::int64_t k) {
    if (k == 0) {
        terms_.clear();
    } else {
        for (auto& [p, coeff] : terms_) coeff *= k;
    }
    return *this;
}

std::string CycleClass::to_string() const {
    std::string out;
    if (terms_.empty()) out = "0";
    bool first = true;
    for (const auto& [p, k] : terms_) {
        std::int64_t mag = k < 0 ? -k : k;
        if (first) {
            if (k < 0) out += "-";
        } else {
            out += k < 0 ? " - " : " + ";
        }
        if (mag != 1) out += std::to_string(mag) + "*";
        out += "sigma[" + p.to_string() + "]";
        first = false;
    }
    return out + " @ " + box_.to_string();
}

CycleClass CycleClass::parse(std::string_view text, std::optional<Box> fallback) {
    std::string_view body = trim(text);
    std::optional<Box> box;
    if (auto at = body.rfind('@'); at != std::string_view::npos) {
        box = Box::parse(trim(body.substr(at + 1)));
        body = trim(body.substr(0, at));
        if (fallback && *fallback != *box) {
            throw InvalidArgument("class is in box " + box->to_string() + " but box " +
                                  fallback->to_string() + " was requested");
        }
    } else {
        box = fallback;
    }
    if (!box) throw InvalidArgument("class expression has no box: '" + std::string(text) + "'");

    CycleClass out(*box);
    if (body == "0") return out;
    std::size_t pos = 0;
    bool first = true;
    auto skip_ws = [&] {
        while (pos < body.size() && std::isspace(static_cast<unsigned char>(body[pos]))) ++pos;
    };
    while (true) {
        skip_ws();
        if (pos >= body.size()) {
            if (first) throw InvalidArgument("empty class expression");
            break;
        }
        std::int64_t sign = 1;
        if (body[pos] == '+' || body[pos] == '-') {
            sign = body[pos] == '-' ? -1 : 1;
            ++pos;
            skip_ws();
        } else if (!first) {
            throw InvalidArgument("expected '+' or '-' at offset " + std::to_string(pos));
        }
        std::int64_t coeff = 1;
        if (pos < body.size() && std::isdigit(static_cast<unsigned char>(body[pos]))) {
            auto [ptr, ec] = std::from_chars(body.data() + pos, body.data() + body.size(), coeff);
            if (ec != std::errc{}) throw InvalidArgument("bad coefficient");
            pos = static_cast<std::size_t>(ptr - body.data());
            skip_ws();
            if (pos >= body.size() || body[pos] != '*') {
                throw InvalidArgument("expected '*' after coefficient");
            }
            ++pos;
            skip_ws();
        }
        constexpr std::string_view kSigma = "sigma[";
        if (body.substr(pos, kSigma.size()) != kSigma) {
            throw InvalidArgument("expected 'sigma[' at offset " + std::to_string(pos));
        }
        pos += kSigma.size();
        auto close = body.find(']', pos);
        if (close == std::string_view::npos) throw InvalidArgument("unterminated 'sigma['");
        out.add_term(Partition::parse(*box, body.substr(pos, close - pos)), sign * coeff);
        pos = close + 1;
        first = false;
    }
    return out;
}

EmbeddingSpec::EmbeddingSpec(Embedding k, int dim_s, Box source)
    : kind(k), s(dim_s), source_box(source) {
    check_s(s);
}

Box EmbeddingSpec::target_box() const {
    return kind == Embedding::H ? Box(source_box.d, source_box.c + s)
                                : Box(source_box.d + s, source_box.c);
}

Partition h_push(const Partition& lambda, int s) {
    check_s(s);
    std::vector<int> parts = lambda.parts();
    for (int& p : parts) p += s;
    return Partition(Box(lambda.box().d, lambda.box().c + s), std::move(parts));
}

CycleClass h_pull(const Partition& mu, int s) {
    const Box source = output_box(Surgery::HPull, mu.box(), s);
    if (mu.part(1) > source.c) return CycleClass(source);
    return CycleClass(Partition(source, mu.parts()));
}

Partition v_push(const Partition& lambda, int s) {
    check_s(s);
    const Box box = lambda.box();
    std::vector<int> parts(s, box.c);
    parts.insert(parts.end(), lambda.parts().begin(), lambda.parts().end());
    return Partition(Box(box.d + s, box.c), std::move(parts));
}

CycleClass v_pull(const Partition& mu, int s) {
    const Box source = output_box(Surgery::VPull, mu.box(), s);
    if (mu.part(source.d + 1) >= 1) return CycleClass(source);
    std::vector<int> kept(mu.parts().begin(), mu.parts().begin() + source.d);
    return CycleClass(Partition(source, std::move(kept)));
}

Surgery parse_surgery(std::string_view name) {
    if (name == "hstar-push" || name == "h*" || name == "h_*") return Surgery::HPush;
    if (name == "hstar-pull" || name == "h^*") return Surgery::HPull;
    if (name == "vstar-push" || name == "v*" || name == "v_*") return Surgery::VPush;
    if (name == "vstar-pull" || name == "v^*") return Surgery::VPull;
    throw InvalidArgument("unknown map kind '" + std::string(name) +
                          "' (expected hstar-push, hstar-pull, vstar-push or vstar-pull)");
}

std::string to_string(Surgery kind) {
    switch (kind) {
        case Surgery::HPush: return "hstar-push";
        case Surgery::HPull: return "hstar-pull";
        case Surgery::VPush: return "vstar-push";
        case Surgery::VPull: return "vstar-pull";
    }
    return "?";
}

Box output_box(Surgery kind, Box input, int s) {
    check_s(s);
    switch (kind) {
        case Surgery::HPush: return Box(input.d, input.c + s);
        case Surgery::VPush: return Box(input.d + s, input.c);
        case Surgery::HPull:
            if (input.c < s) {
                throw InvalidArgument("box " + input.to_string() + " has fewer than s=" +
                                      std::to_string(s) + " columns");
            }
            return Box(input.d, input.c - s);
        case Surgery::VPull:
            if (input.d <= s) {
                throw InvalidArgument("box " + input.to_string() + " needs more than s=" +
                                      std::to_string(s) + " rows");
            }
            return Box(input.d - s, input.c);
    }
    throw InvalidArgument("unknown surgery");
}

CycleClass apply_linear(Surgery kind, int s, const CycleClass& x) {
    CycleClass out(output_box(kind, x.box(), s));
    for (const auto& [p, k] : x.terms()) {
        switch (kind) {
            case Surgery::HPush: out.add_term(h_push(p, s), k); break;
            case Surgery::VPush: out.add_term(v_push(p, s), k); break;
            case Surgery::HPull: out += k * h_pull(p, s); break;
            case Surgery::VPull: out += k * v_pull(p, s); break;
        }
    }
    return out;
}

}  // namespace schubert
