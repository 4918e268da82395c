#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace cwc {

/// A fixed-length word over the alphabet {0, ..., q-1} with cached support.
/// Coordinates are 1-based in the public interface.
class Codeword {
public:
    Codeword(std::vector<int> symbols, int alphabet_size);

    int length() const { return static_cast<int>(symbols_.size()); }
    int alphabet_size() const { return q_; }
    /// Symbol at 1-based coordinate i.
    int symbol(int i) const { return symbols_[i - 1]; }
    const std::vector<int>& symbols() const { return symbols_; }
    /// Sorted 1-based coordinates with nonzero symbol.
    const std::vector<int>& support() const { return support_; }
    int weight() const { return static_cast<int>(support_.size()); }

    bool operator==(const Codeword& o) const { return symbols_ == o.symbols_; }

private:
    std::vector<int> symbols_;
    std::vector<int> support_;
    int q_;
};

/// Number of coordinates where u and v differ.
int hamming_distance(const Codeword& u, const Codeword& v);

/// |supp(u) ∩ supp(v)| for words of equal length.
int support_intersection_size(const Codeword& u, const Codeword& v);

/// A set of codewords with declared parameters. d == 0 means no distance is
/// declared (e.g. a singleton code, whose minimum distance is undefined).
struct ConstantWeightCode {
    int n = 0;
    int q = 0;
    int w = 0;
    int d = 0;
    std::vector<Codeword> words;
};

struct VerifyReport {
    bool pass = true;
    std::string reason;     // empty when pass
    int first = -1;         // offending codeword indices (0-based), -1 if n/a
    int second = -1;
};

/// Checks every declared invariant: word lengths, symbol range, weight,
/// no duplicates, and pairwise distance >= d. Failures are reported, never
/// thrown. For w=3, d=4 codes, pairs whose supports meet in at most one
/// point are skipped (their distance is at least 4 by construction).
VerifyReport verify_code(const ConstantWeightCode& c);

/// Minimum pairwise Hamming distance; nullopt for fewer than two words.
std::optional<int> min_distance(const ConstantWeightCode& c);

// --- cwcode v1 file format -------------------------------------------------
//
//   cwcode 1
//   n=<n> q=<q> w=<w> d=<d>
//   <one codeword per line, n space-separated integers>
//
// Lines starting with '#' after the header are comments. LF line endings.

void write_cwcode(std::ostream& out, const ConstantWeightCode& c);
ConstantWeightCode read_cwcode(std::istream& in);
void save_cwcode(const std::string& path, const ConstantWeightCode& c);
ConstantWeightCode load_cwcode(const std::string& path);

}  // namespace cwc
