#pragma once

#include <cstddef>
#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "loopkit/rational.hpp"

namespace loopkit {

using Column = std::uint32_t;

// Sparse vector with strictly increasing column indices and no zero entries.
struct SparseRow {
    std::vector<Column> cols;
    std::vector<Rational> vals;

    // Sorts, merges duplicate columns and drops zeros.
    static SparseRow from_terms(std::vector<std::pair<Column, Rational>> terms);

    bool empty() const noexcept { return cols.empty(); }
    std::size_t size() const noexcept { return cols.size(); }
    friend bool operator==(const SparseRow &, const SparseRow &) = default;
};

// a + f * b
SparseRow axpy(const SparseRow &a, const Rational &f, const SparseRow &b);

enum class Execution { serial, parallel };

// Row-echelon basis over Q. Each stored row has its smallest column as
// pivot, with coefficient 1 there; no two rows share a pivot. The set of
// pivot columns is an invariant of the row space, so it does not depend on
// insertion order.
class Echelon {
public:
    // Reduces `row` until its leading column is not a pivot, then stores it
    // if nonzero. Returns true when the rank grew.
    bool insert(SparseRow row);

    // Leading-column reduction only.
    SparseRow reduce_leading(SparseRow row) const;

    // Eliminates every pivot column. The result is the unique representative
    // of row modulo the span that is supported on non-pivot columns.
    SparseRow reduce(SparseRow row) const;

    std::size_t rank() const noexcept { return rows_.size(); }
    bool has_pivot(Column c) const { return pivot_index_.contains(c); }
    std::vector<Column> pivot_columns() const;

private:
    std::unordered_map<Column, std::size_t> pivot_index_;
    std::vector<SparseRow> rows_;
};

// Echelon basis of span(rows).
//
// serial: rows are inserted one at a time (the reference implementation).
// parallel: rows are taken in batches; each batch is leading-reduced against
// the pivots known before the batch by an OpenMP loop, then merged into the
// basis sequentially. Both produce the same pivot set and rank.
Echelon build_echelon(std::vector<SparseRow> rows, Execution exec = Execution::parallel,
                      std::size_t batch = 512);

} // namespace loopkit
