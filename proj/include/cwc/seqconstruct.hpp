#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cwc/core.hpp"
#include "cwc/lex.hpp"

namespace cwc {

/// Fill sequence over alphabet q. The distance-four fill sequence
/// (special_sequence) has entries in [1, q-1]; its zero-based precursor
/// (special_sequence_base) has entries in [0, q-2].
struct FillSequence {
    int q = 0;
    std::vector<int> entries;
};

/// The C(n,3) x n weight-3 incidence matrix whose row supports run through
/// all 3-subsets of [n] in lexicographic order, either as a {0,1}-matrix
/// (unfilled) or with nonzero entries replaced column-by-column by a fill
/// sequence (filled). Every column carries exactly C(n-1,2) nonzero entries.
class FillMatrix {
public:
    int n() const { return n_; }
    int q() const { return q_; }
    bool filled() const { return filled_; }
    std::int64_t row_count() const { return static_cast<std::int64_t>(rows_.size()); }
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    const std::vector<KSubset>& supports() const { return supports_; }

    friend FillMatrix build_fill_matrix(int n);
    friend FillMatrix fill(const FillMatrix& m, const FillSequence& s);

private:
    FillMatrix() = default;
    int n_ = 0;
    int q_ = 2;
    bool filled_ = false;
    std::vector<std::vector<int>> rows_;
    std::vector<KSubset> supports_;
};

/// The unfilled matrix M(n); n >= 3.
FillMatrix build_fill_matrix(int n);

/// Replaces the nonzero entries of each column, traversed top-down, by the
/// entries of s in order. s must have length C(n-1,2) and no zero entries.
FillMatrix fill(const FillMatrix& m, const FillSequence& s);

/// Zero-based precursor of the special sequence: segments of lengths
/// q-2, q-3, ..., 1; the first segment is (0, 1, ..., q-3) and each later
/// segment is the previous one plus 2, truncated by one, mod q-1.
FillSequence special_sequence_base(int q);

/// The distance-four fill sequence: special_sequence_base(q) plus one
/// entrywise. Filling M(q) with it yields a code of minimum distance four.
FillSequence special_sequence(int q);

/// The rows of a filled matrix as a constant-weight code. The declared
/// distance is the computed minimum pairwise distance (0 for a singleton),
/// never assumed.
ConstantWeightCode code_of(const FillMatrix& m);

struct SpecialCheck {
    bool special = true;
    // 1-based rows of the first offending pair when not special.
    std::int64_t row_a = -1;
    std::int64_t row_b = -1;
};

/// True iff the code of M(q, s) has minimum distance four; equivalently,
/// every pair of rows whose supports meet in two points differs in both
/// shared coordinates. Reports the first counterexample pair otherwise.
SpecialCheck is_special_sequence(int q, const FillSequence& s);

/// A plain row matrix produced by column reordering; row supports are not
/// necessarily in lexicographic order.
struct RowMatrix {
    int n = 0;
    std::vector<std::vector<int>> rows;
};

/// Columns reordered as (j, 1, ..., j-1, j+1, ..., n); rows untouched.
RowMatrix move_column_front(const FillMatrix& m, int j);

/// The row-move loop: while the first column is not (C(n-1,2) nonzeros
/// followed by zeros), take the first nonzero row below the first zero row
/// and splice it just above that zero row. The result keeps the row multiset
/// and leaves the row supports in lexicographic order.
RowMatrix reorder(const RowMatrix& mj);

struct FrontFillReport {
    bool ok = true;
    int shared_point = -1;  // the second shared support point on failure
    std::int64_t row_a = -1, row_b = -1;  // 1-based offending rows
};

/// Fills only the first column of M(q) with the special sequence and checks
/// that any two rows whose supports share coordinate 1 plus one more point
/// receive distinct first-column values.
FrontFillReport front_fill_distinct(int q);

/// One-line text form: space-separated entries, or a digit string when
/// compact is set (compact requires q <= 10).
std::string sequence_to_string(const FillSequence& s, bool compact = false);

/// Parses either form; the digit-string form is accepted only for q <= 10.
FillSequence sequence_from_string(int q, const std::string& text);

}  // namespace cwc
