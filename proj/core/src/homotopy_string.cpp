#include "gentle/homotopy_string.hpp"

#include <algorithm>
#include <sstream>

#include "gentle/error.hpp"

namespace gentle {

HString HString::trivial(int vertex, int sign) {
    HString w;
    w.kind_ = Kind::Trivial;
    w.vertex_ = vertex;
    w.sign_ = sign;
    return w;
}

HString HString::word(std::vector<Letter> traversal) {
    if (traversal.empty()) return HString();
    HString w;
    w.kind_ = Kind::Word;
    w.letters_ = std::move(traversal);
    return w;
}

int letter_source(const Quiver& q, const Letter& l) {
    const auto& a = q.arrow(l.arrow);
    return l.inverse ? a.target : a.source;
}

int letter_target(const Quiver& q, const Letter& l) {
    const auto& a = q.arrow(l.arrow);
    return l.inverse ? a.source : a.target;
}

int letter_S(const Quiver& q, const Letter& l) {
    const auto& a = q.arrow(l.arrow);
    return l.inverse ? a.T : a.S;
}

int letter_T(const Quiver& q, const Letter& l) {
    const auto& a = q.arrow(l.arrow);
    return l.inverse ? a.S : a.T;
}

int source(const Quiver& q, const HString& w) {
    switch (w.kind()) {
        case HString::Kind::Empty: fail(ErrorKind::EmptyString, "source of the empty string");
        case HString::Kind::Trivial: return w.vertex();
        case HString::Kind::Word: return letter_source(q, w.first());
    }
    return -1;
}

int target(const Quiver& q, const HString& w) {
    switch (w.kind()) {
        case HString::Kind::Empty: fail(ErrorKind::EmptyString, "target of the empty string");
        case HString::Kind::Trivial: return w.vertex();
        case HString::Kind::Word: return letter_target(q, w.last());
    }
    return -1;
}

namespace {

bool letters_chain(const Quiver& q, const Letter& earlier, const Letter& later) {
    if (letter_target(q, earlier) != letter_source(q, later)) return false;
    return !(earlier.arrow == later.arrow && earlier.inverse != later.inverse);
}

// Consecutive letters of equal direction that form a relation are separated by a
// homotopy-letter boundary.
bool boundary_between(const Quiver& q, const Letter& earlier, const Letter& later) {
    if (earlier.inverse != later.inverse) return true;
    if (!earlier.inverse) return q.is_relation(later.arrow, earlier.arrow);
    return q.is_relation(earlier.arrow, later.arrow);
}

// Lengths of the homotopy letters in traversal order (sigma_1 first).
std::vector<int> segment_lengths(const Quiver& q, const HString& w) {
    std::vector<int> out;
    const auto& ls = w.letters();
    int run = 1;
    for (std::size_t k = 1; k < ls.size(); ++k) {
        if (boundary_between(q, ls[k - 1], ls[k])) {
            out.push_back(run);
            run = 1;
        } else {
            ++run;
        }
    }
    out.push_back(run);
    return out;
}

}  // namespace

bool is_valid(const Quiver& q, const HString& w) {
    switch (w.kind()) {
        case HString::Kind::Empty: return true;
        case HString::Kind::Trivial:
            return w.vertex() >= 0 && w.vertex() < q.vertex_count() && (w.sign() == 1 || w.sign() == -1);
        case HString::Kind::Word: break;
    }
    for (const auto& l : w.letters())
        if (l.arrow < 0 || l.arrow >= q.arrow_count()) return false;
    const auto& ls = w.letters();
    for (std::size_t k = 1; k < ls.size(); ++k)
        if (!letters_chain(q, ls[k - 1], ls[k])) return false;
    return true;
}

HString make_word(const Quiver& q, const std::vector<Letter>& traversal) {
    if (traversal.empty()) fail(ErrorKind::NotAString, "a word needs at least one letter");
    HString w = HString::word(traversal);
    if (!is_valid(q, w)) fail(ErrorKind::NotAString, "letters do not form a homotopy string");
    return w;
}

HString make_word_written(const Quiver& q, const std::vector<Letter>& written) {
    return make_word(q, std::vector<Letter>(written.rbegin(), written.rend()));
}

HString inverse(const HString& w) {
    switch (w.kind()) {
        case HString::Kind::Empty: return w;
        case HString::Kind::Trivial: return HString::trivial(w.vertex(), -w.sign());
        case HString::Kind::Word: break;
    }
    std::vector<Letter> out;
    out.reserve(w.letters().size());
    for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) out.push_back(it->flipped());
    return HString::word(std::move(out));
}

HString right_unit(const Quiver& q, const HString& w) {
    if (w.is_empty()) fail(ErrorKind::EmptyString, "unit of the empty string");
    if (w.is_trivial()) return w;
    const Letter& a1 = w.first();
    const auto& arr = q.arrow(a1.arrow);
    return HString::trivial(letter_source(q, a1), a1.inverse ? -arr.T : arr.S);
}

HString left_unit(const Quiver& q, const HString& w) {
    if (w.is_empty()) fail(ErrorKind::EmptyString, "unit of the empty string");
    if (w.is_trivial()) return w;
    const Letter& al = w.last();
    const auto& arr = q.arrow(al.arrow);
    return HString::trivial(letter_target(q, al), al.inverse ? -arr.S : arr.T);
}

std::optional<HString> compose(const Quiver& q, const HString& w, const HString& w2) {
    if (w.is_empty()) return w2;
    if (w2.is_empty()) return w;
    if (w.is_trivial() && w2.is_trivial()) {
        if (w == w2) return w;
        return std::nullopt;
    }
    if (w2.is_trivial()) {
        if (right_unit(q, w) == w2) return w;
        return std::nullopt;
    }
    if (w.is_trivial()) {
        if (left_unit(q, w2) == w) return w2;
        return std::nullopt;
    }
    if (source(q, w) != target(q, w2)) return std::nullopt;
    const Letter& x = w.first();
    const Letter& y = w2.last();
    bool ok = false;
    if (x.inverse != y.inverse)
        ok = x.arrow != y.arrow;
    else if (!x.inverse)
        ok = q.is_relation(x.arrow, y.arrow);
    else
        ok = q.is_relation(y.arrow, x.arrow);
    if (!ok) return std::nullopt;
    std::vector<Letter> ls = w2.letters();
    ls.insert(ls.end(), w.letters().begin(), w.letters().end());
    return HString::word(std::move(ls));
}

HString concat(const HString& left, const HString& right) {
    if (left.is_word() && right.is_word()) {
        std::vector<Letter> ls = right.letters();
        ls.insert(ls.end(), left.letters().begin(), left.letters().end());
        return HString::word(std::move(ls));
    }
    if (left.is_word()) return left;
    if (right.is_word()) return right;
    return left.is_empty() ? right : left;
}

std::vector<HString> homotopy_partition(const Quiver& q, const HString& w) {
    if (w.is_empty()) fail(ErrorKind::EmptyString, "partition of the empty string");
    if (w.is_trivial()) return {};
    std::vector<HString> parts;
    std::size_t pos = 0;
    for (int len : segment_lengths(q, w)) {
        parts.push_back(HString::word(
            std::vector<Letter>(w.letters().begin() + static_cast<long>(pos),
                                w.letters().begin() + static_cast<long>(pos + len))));
        pos += static_cast<std::size_t>(len);
    }
    std::reverse(parts.begin(), parts.end());
    return parts;
}

bool is_direct(const HString& w) {
    return w.is_word() &&
           std::none_of(w.letters().begin(), w.letters().end(), [](const Letter& l) { return l.inverse; });
}

bool is_inverse_word(const HString& w) {
    return w.is_word() &&
           std::all_of(w.letters().begin(), w.letters().end(), [](const Letter& l) { return l.inverse; });
}

int degree(const Quiver& q, const HString& w) {
    if (!w.is_word()) return 0;
    const auto lens = segment_lengths(q, w);
    int deg = 0;
    std::size_t pos = 0;
    for (int len : lens) {
        deg += w.letters()[pos].inverse ? -1 : 1;
        pos += static_cast<std::size_t>(len);
    }
    return deg;
}

HString prefix(const Quiver& q, const HString& w, int i) {
    if (w.is_empty()) fail(ErrorKind::EmptyString, "prefix of the empty string");
    if (w.is_trivial()) {
        if (i != 0) fail(ErrorKind::IndexOutOfRange, "prefix index out of range");
        return w;
    }
    auto lens = segment_lengths(q, w);
    const int L = static_cast<int>(lens.size());
    if (i < 0 || i > L) fail(ErrorKind::IndexOutOfRange, "prefix index out of range");
    if (i == 0) return left_unit(q, w);
    int keep = 0;
    for (int k = 0; k < i; ++k) keep += lens[static_cast<std::size_t>(L - 1 - k)];
    const auto& ls = w.letters();
    return HString::word(std::vector<Letter>(ls.end() - keep, ls.end()));
}

HString drop_leftmost_letter(const Quiver& q, const HString& w) {
    if (w.is_empty()) fail(ErrorKind::EmptyString, "cannot drop a letter from the empty string");
    if (w.is_trivial()) fail(ErrorKind::IndexOutOfRange, "trivial string has no homotopy letter");
    auto lens = segment_lengths(q, w);
    if (lens.size() == 1) return right_unit(q, w);
    const auto& ls = w.letters();
    return HString::word(std::vector<Letter>(ls.begin(), ls.end() - lens.back()));
}

std::pair<int, int> string_signs(const Quiver& q, const HString& w) {
    if (w.is_empty()) fail(ErrorKind::EmptyString, "signs of the empty string");
    if (w.is_trivial()) return {w.sign(), -w.sign()};
    return {letter_S(q, w.first()), letter_T(q, w.last())};
}

HString parse(const Quiver& q, const std::string& text) {
    std::istringstream in(text);
    std::vector<std::string> tokens;
    for (std::string tok; in >> tok;) tokens.push_back(tok);
    if (tokens.empty()) fail(ErrorKind::SyntaxError, "empty string text; use @ for the empty string");

    auto is_trivial_token = [](const std::string& t) { return t.rfind("1_", 0) == 0; };
    if (tokens.size() == 1 && tokens[0] == "@") return HString::empty();
    if (tokens.size() == 1 && is_trivial_token(tokens[0])) {
        std::string label = tokens[0].substr(2);
        int sign = 1;
        if (!label.empty() && label.back() == '-') {
            sign = -1;
            label.pop_back();
        }
        if (label.empty()) fail(ErrorKind::SyntaxError, "trivial string without a vertex: " + tokens[0]);
        auto v = q.find_vertex(label);
        if (!v) fail(ErrorKind::UnknownEntity, "unknown vertex '" + label + "'");
        return HString::trivial(*v, sign);
    }

    std::vector<Letter> written;
    for (const auto& tok : tokens) {
        if (tok == "@" || is_trivial_token(tok))
            fail(ErrorKind::SyntaxError, "'" + tok + "' must stand alone");
        std::string name = tok;
        bool inv = false;
        if (name.back() == '-') {
            inv = true;
            name.pop_back();
        }
        if (name.empty()) fail(ErrorKind::SyntaxError, "dangling '-'");
        auto a = q.find_arrow(name);
        if (!a) fail(ErrorKind::UnknownEntity, "unknown arrow '" + name + "'");
        written.push_back(Letter{*a, inv});
    }
    return make_word_written(q, written);
}

namespace {

template <class VName, class AName>
std::string render_with(const HString& w, VName vname, AName aname) {
    switch (w.kind()) {
        case HString::Kind::Empty: return "@";
        case HString::Kind::Trivial: return "1_" + vname(w.vertex()) + (w.sign() < 0 ? "-" : "");
        case HString::Kind::Word: break;
    }
    std::string out;
    for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
        if (!out.empty()) out += ' ';
        out += aname(it->arrow);
        if (it->inverse) out += '-';
    }
    return out;
}

}  // namespace

std::string render(const Quiver& q, const HString& w) {
    return render_with(
        w, [&q](int v) { return q.vertex_label(v); }, [&q](int a) { return q.arrow_label(a); });
}

std::string render_canonical(const Quiver& q, const HString& w) {
    return render_with(
        w, [&q](int v) { return q.vertex_canonical(v); }, [&q](int a) { return q.arrow_canonical(a); });
}

bool prefers_inverse(const Quiver& q, const HString& w) {
    return render_canonical(q, inverse(w)) < render_canonical(q, w);
}

bool is_band(const Quiver& q, const HString& w) {
    if (!w.is_word() || !is_valid(q, w)) return false;
    if (source(q, w) != target(q, w)) return false;
    const auto parts = homotopy_partition(q, w);
    if (parts.size() < 2) return false;
    if (degree(q, w) != 0) return false;
    const HString& sigma_L = parts.front();
    const HString& sigma_1 = parts.back();
    if (sigma_L.first().inverse == sigma_1.first().inverse) return false;
    if (!compose(q, sigma_1, sigma_L)) return false;
    const auto& ls = w.letters();
    const std::size_t l = ls.size();
    for (std::size_t d = 1; d < l; ++d) {
        if (l % d != 0) continue;
        bool periodic = true;
        for (std::size_t k = d; k < l && periodic; ++k) periodic = ls[k] == ls[k - d];
        if (periodic) return false;
    }
    return true;
}

std::vector<HString> rotations(const Quiver& q, const HString& band) {
    std::vector<HString> out;
    if (!band.is_word()) return out;
    const auto& ls = band.letters();
    std::size_t offset = 0;
    for (int len : segment_lengths(q, band)) {
        std::vector<Letter> rot(ls.begin() + static_cast<long>(offset), ls.end());
        rot.insert(rot.end(), ls.begin(), ls.begin() + static_cast<long>(offset));
        HString cand = HString::word(std::move(rot));
        if (is_band(q, cand)) out.push_back(std::move(cand));
        offset += static_cast<std::size_t>(len);
    }
    return out;
}

std::optional<HString> canonical_band(const Quiver& q, const HString& w) {
    if (!is_band(q, w)) return std::nullopt;
    std::optional<HString> best;
    std::string best_text;
    for (const HString& base : {w, inverse(w)}) {
        for (auto& cand : rotations(q, base)) {
            std::string text = render_canonical(q, cand);
            if (!best || text < best_text) {
                best = cand;
                best_text = std::move(text);
            }
        }
    }
    return best;
}

HString theta(const Quiver& q, int x, int eps) {
    const auto& p = q.params();
    const VertexClass c = q.vertex(x).cls;
    const HString unit = HString::trivial(x, -eps);
    auto arrow_word = [](int a) { return HString::word({Letter{a, false}}); };
    switch (c.type) {
        case VertexType::A:
        case VertexType::APrime:
            return eps == -1 ? unit : HString::empty();
        case VertexType::C:
            if (eps == 1 && p.r1 > 0) return arrow_word(q.alpha(p.r()));
            if (eps == -1 && p.s1 > 0) return arrow_word(q.beta(p.s()));
            return HString::empty();
        case VertexType::D:
            if (eps == -1) return unit;
            if (c.index >= 1 && c.index <= p.r1 - 1) return arrow_word(q.alpha(c.index + p.r2));
            return HString::empty();
        case VertexType::DPrime:
            if (eps == -1) return unit;
            if (c.index >= 1 && c.index <= p.s1 - 1) return arrow_word(q.beta(c.index + p.s2));
            return HString::empty();
        default:
            return HString::empty();
    }
}

HString theta_search(const Quiver& q, int x, int eps) {
    int start = -1;
    for (int a : q.in_arrows(x))
        if (q.arrow(a).T == eps) start = a;
    if (start < 0) return HString::trivial(x, -eps);
    std::vector<int> chain{start};  // traversal order reversed: chain.back() is earliest
    const int bound = q.arrow_count() + 1;
    while (true) {
        const int earliest = chain.back();
        int next = -1;
        for (int b : q.in_arrows(q.arrow(earliest).source))
            if (q.is_relation(earliest, b)) next = b;
        if (next < 0) break;
        chain.push_back(next);
        if (static_cast<int>(chain.size()) > bound) return HString::empty();
    }
    std::vector<Letter> ls;
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) ls.push_back(Letter{*it, false});
    return HString::word(std::move(ls));
}

namespace {

bool extend(const Quiver& q, std::vector<Letter>& ls, int max_len,
            const std::function<bool(const HString&)>& visit) {
    if (!visit(HString::word(ls))) return false;
    if (static_cast<int>(ls.size()) >= max_len) return true;
    const Letter prev = ls.back();
    const int v = letter_target(q, prev);
    auto try_letter = [&](Letter l) {
        if (l.arrow == prev.arrow && l.inverse != prev.inverse) return true;
        ls.push_back(l);
        const bool go = extend(q, ls, max_len, visit);
        ls.pop_back();
        return go;
    };
    for (int a : q.out_arrows(v))
        if (!try_letter(Letter{a, false})) return false;
    for (int a : q.in_arrows(v))
        if (!try_letter(Letter{a, true})) return false;
    return true;
}

}  // namespace

void enumerate_strings(const Quiver& q, int max_len, const std::function<bool(const HString&)>& visit) {
    for (int v = 0; v < q.vertex_count(); ++v)
        for (int eps : {1, -1})
            if (!visit(HString::trivial(v, eps))) return;
    if (max_len < 1) return;
    std::vector<Letter> ls;
    for (int a = 0; a < q.arrow_count(); ++a) {
        for (bool inv : {false, true}) {
            ls.assign(1, Letter{a, inv});
            if (!extend(q, ls, max_len, visit)) return;
        }
    }
}

std::vector<HString> all_strings(const Quiver& q, int max_len) {
    std::vector<HString> out;
    enumerate_strings(q, max_len, [&out](const HString& w) {
        out.push_back(w);
        return true;
    });
    return out;
}

}  // namespace gentle
