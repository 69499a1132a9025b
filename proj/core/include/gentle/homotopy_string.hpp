#pragma once

#include <compare>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gentle/quiver.hpp"

namespace gentle {

struct Letter {
    int arrow = 0;
    bool inverse = false;

    Letter flipped() const { return Letter{arrow, !inverse}; }
    bool operator==(const Letter&) const = default;
    auto operator<=>(const Letter&) const = default;
};

// Empty, trivial 1_x^eps, or a word alpha_l ... alpha_1. Letters are stored in
// traversal order: letters()[0] is alpha_1, letters().back() is alpha_l.
class HString {
public:
    enum class Kind { Empty, Trivial, Word };

    HString() = default;
    static HString empty() { return HString(); }
    static HString trivial(int vertex, int sign);
    // No path check; see make_word for the validating constructor.
    static HString word(std::vector<Letter> traversal);

    Kind kind() const { return kind_; }
    bool is_empty() const { return kind_ == Kind::Empty; }
    bool is_trivial() const { return kind_ == Kind::Trivial; }
    bool is_word() const { return kind_ == Kind::Word; }

    int vertex() const { return vertex_; }
    int sign() const { return sign_; }
    const std::vector<Letter>& letters() const { return letters_; }
    int length() const { return static_cast<int>(letters_.size()); }
    const Letter& first() const { return letters_.front(); }  // alpha_1
    const Letter& last() const { return letters_.back(); }    // alpha_l

    bool operator==(const HString&) const = default;
    auto operator<=>(const HString&) const = default;

private:
    Kind kind_ = Kind::Empty;
    int vertex_ = -1;
    int sign_ = 0;
    std::vector<Letter> letters_;
};

// Letters listed in written order (leftmost first); throws NotAString.
HString make_word_written(const Quiver& q, const std::vector<Letter>& written);
// Letters listed in traversal order; throws NotAString.
HString make_word(const Quiver& q, const std::vector<Letter>& traversal);

int letter_source(const Quiver& q, const Letter& l);
int letter_target(const Quiver& q, const Letter& l);
int letter_S(const Quiver& q, const Letter& l);
int letter_T(const Quiver& q, const Letter& l);

// s(w) and t(w); throws EmptyString on the empty string.
int source(const Quiver& q, const HString& w);
int target(const Quiver& q, const HString& w);

// Path in the double quiver with no a a^-1 or a^-1 a factor.
bool is_valid(const Quiver& q, const HString& w);

HString inverse(const HString& w);

// w . w2 (w2 is traversed first), or nullopt when undefined.
std::optional<HString> compose(const Quiver& q, const HString& w, const HString& w2);

// Concatenation of words already known to compose; trivial/empty factors vanish.
HString concat(const HString& left, const HString& right);

// Homotopy letters in written order: result[0] is sigma_L.
std::vector<HString> homotopy_partition(const Quiver& q, const HString& w);
bool is_direct(const HString& w);
bool is_inverse_word(const HString& w);
int degree(const Quiver& q, const HString& w);

// w^[i] = sigma_L ... sigma_{L-i+1}; w^[0] is the trivial string composable on the left.
HString prefix(const Quiver& q, const HString& w, int i);
// Removes the leftmost homotopy letter; a single letter leaves the trivial string
// at its source that composes on the right of it.
HString drop_leftmost_letter(const Quiver& q, const HString& w);

// Trivial string 1_{s w}^eps with w . 1 defined.
HString right_unit(const Quiver& q, const HString& w);
// Trivial string 1_{t w}^eps with 1 . w defined.
HString left_unit(const Quiver& q, const HString& w);

std::pair<int, int> string_signs(const Quiver& q, const HString& w);

// Grammar: whitespace-separated tokens, leftmost token = alpha_l, trailing '-'
// marks an inverse, trivial = 1_<vertex>[-], empty = @.
HString parse(const Quiver& q, const std::string& text);
std::string render(const Quiver& q, const HString& w);
// Same grammar with canonical names; independent of user labels.
std::string render_canonical(const Quiver& q, const HString& w);

// Bytewise-smaller canonical rendering of w and w^-1.
bool prefers_inverse(const Quiver& q, const HString& w);

bool is_band(const Quiver& q, const HString& w);
std::vector<HString> rotations(const Quiver& q, const HString& band);
std::optional<HString> canonical_band(const Quiver& q, const HString& w);

// theta_{x,eps} from the closed-form list; empty means no maximal antipath.
HString theta(const Quiver& q, int x, int eps);
// Maximal antipath ending in x by direct search.
HString theta_search(const Quiver& q, int x, int eps);

// Every homotopy string of length <= max_len: trivial ones first, then words by
// length. The callback returns false to stop.
void enumerate_strings(const Quiver& q, int max_len,
                       const std::function<bool(const HString&)>& visit);
std::vector<HString> all_strings(const Quiver& q, int max_len);

}  // namespace gentle
