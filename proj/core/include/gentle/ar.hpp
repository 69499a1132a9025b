#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gentle/homotopy_string.hpp"
#include "gentle/walks.hpp"

namespace gentle {

// phi(a) = -1 if a = 0, else 0.
inline int phi(int a) { return a == 0 ? -1 : 0; }

struct PlusValue {
    HString string;                // empty when there is no such neighbour
    std::optional<int> m_prime;    // absent exactly when string is empty
    std::string row;               // table row that fired
};

struct MinusValue {
    HString string;
    std::string row;
    bool unspecified = false;      // the literal table leaves this cell blank
};

// Literal transcription of the omega^+ tables (non-trivial and trivial strings).
PlusValue table_omega_plus(const Walks& w, const HString& omega);
// Literal transcription of the omega_- tables.
MinusValue table_omega_minus(const Walks& w, const HString& omega);

// A correction to a literal table cell, justified by the direct algorithm and by
// mesh consistency.
struct Erratum {
    std::string id;
    std::string row;
    std::string change;
};

const std::vector<Erratum>& errata();

// Erratum id that applies to this input, if any.
std::optional<std::string> plus_erratum(const Walks& w, const HString& omega);
std::optional<std::string> minus_erratum(const Walks& w, const HString& omega);

// Effective values: the tables with the errata applied.
PlusValue omega_plus(const Walks& w, const HString& omega);
HString omega_minus_lower(const Walks& w, const HString& omega);
// omega_+ = ((omega^-1)^+)^-1 and omega^- = ((omega^-1)_-)^-1.
HString omega_plus_lower(const Walks& w, const HString& omega);
HString omega_minus_upper(const Walks& w, const HString& omega);
int m_doubleprime(const Walks& w, const HString& omega);

struct OracleResult {
    HString string;
    std::optional<int> m_prime;
    int case_no = 0;  // 1..6
    int rho = 0;
    HString truncated;  // omega'
    HString sigma;      // maximal relation-free path composable on the left
    HString theta;
};

// Direct six-case computation of omega^+ and m'.
OracleResult bobinski_direct(const Quiver& q, const HString& omega);

struct Shifted {
    int degree = 0;
    HString string;

    bool operator==(const Shifted&) const = default;
};

std::string render(const Quiver& q, const Shifted& s);

struct ARTriangle {
    Shifted start;
    std::vector<Shifted> middle;  // one or two terms
    Shifted end;
    Shifted connecting;           // start[1], i.e. the start string one degree down
};

ARTriangle ar_triangle_starting(const Walks& w, int m, const HString& omega);
ARTriangle ar_triangle_ending(const Walks& w, int m, const HString& omega);
Shifted tau(const Walks& w, int m, const HString& omega);
Shifted tau_inverse(const Walks& w, int m, const HString& omega);

enum class Diagonal { UpperRight, LowerRight, UpperLeft, LowerLeft };
std::string_view to_string(Diagonal d);
Diagonal parse_diagonal(const std::string& text);

// Up to n entries starting with omega[m]; stops early at the empty string.
std::vector<Shifted> diagonal(const Walks& w, int m, const HString& omega, Diagonal d, int n);

struct CrosscheckLine {
    std::string omega;
    std::string table;
    std::string oracle;
    std::string row;
    bool string_mismatch = false;
    bool m_prime_mismatch = false;
    std::string erratum;  // empty when no registered erratum explains the line
};

struct CrosscheckReport {
    Parameters params;
    int max_len = 0;
    bool effective = false;  // compared effective values instead of the literal tables
    long long checked = 0;
    long long string_mismatches = 0;
    long long m_prime_mismatches = 0;
    long long unexplained = 0;
    std::vector<CrosscheckLine> lines;
};

// Compares table omega^+ against the direct algorithm on every string up to
// max_len. Work is split across `threads` workers; output order is deterministic.
CrosscheckReport crosscheck(const Walks& w, int max_len, bool effective, int threads = 0);

}  // namespace gentle
