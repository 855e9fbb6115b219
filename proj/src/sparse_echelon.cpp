#include "loopkit/sparse_echelon.hpp"

#include <algorithm>
#include <functional>

namespace loopkit {

SparseRow SparseRow::from_terms(std::vector<std::pair<Column, Rational>> terms)
{
    std::sort(terms.begin(), terms.end(),
              [](const auto &x, const auto &y) { return x.first < y.first; });
    SparseRow row;
    row.cols.reserve(terms.size());
    row.vals.reserve(terms.size());
    for (auto &[c, v] : terms) {
        if (!row.cols.empty() && row.cols.back() == c) {
            row.vals.back() += v;
            if (row.vals.back() == 0) {
                row.cols.pop_back();
                row.vals.pop_back();
            }
            continue;
        }
        if (v == 0)
            continue;
        row.cols.push_back(c);
        row.vals.push_back(std::move(v));
    }
    return row;
}

SparseRow axpy(const SparseRow &a, const Rational &f, const SparseRow &b)
{
    SparseRow out;
    out.cols.reserve(a.size() + b.size());
    out.vals.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    Rational tmp;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a.cols[i] < b.cols[j])) {
            out.cols.push_back(a.cols[i]);
            out.vals.push_back(a.vals[i]);
            ++i;
        } else if (i == a.size() || b.cols[j] < a.cols[i]) {
            out.cols.push_back(b.cols[j]);
            out.vals.push_back(f * b.vals[j]);
            ++j;
        } else {
            tmp = a.vals[i] + f * b.vals[j];
            if (tmp != 0) {
                out.cols.push_back(a.cols[i]);
                out.vals.push_back(tmp);
            }
            ++i;
            ++j;
        }
    }
    return out;
}

namespace {

// Dense accumulator for one row under reduction. Columns waiting to be
// looked at sit in a min-heap; a column is pushed when it first becomes
// touched, so every heap entry is unique.
struct Accumulator {
    std::vector<Rational> acc;
    std::vector<std::uint8_t> touched;
    std::vector<Column> heap;
    Rational tmp;

    void touch(Column c)
    {
        if (c >= acc.size()) {
            acc.resize(std::size_t(c) + 1);
            touched.resize(std::size_t(c) + 1, 0);
        }
        if (!touched[c]) {
            touched[c] = 1;
            heap.push_back(c);
            std::push_heap(heap.begin(), heap.end(), std::greater<>());
        }
    }

    void load(const SparseRow &row)
    {
        for (std::size_t i = 0; i < row.size(); ++i) {
            touch(row.cols[i]);
            acc[row.cols[i]] = row.vals[i];
        }
    }

    Column pop()
    {
        std::pop_heap(heap.begin(), heap.end(), std::greater<>());
        const Column c = heap.back();
        heap.pop_back();
        touched[c] = 0;
        return c;
    }

    // acc += f * row, skipping the pivot entry, which the caller cancels.
    void add_tail(const Rational &f, const SparseRow &row)
    {
        for (std::size_t i = 1; i < row.size(); ++i) {
            const Column c = row.cols[i];
            touch(c);
            mpq_mul(tmp.get_mpq_t(), f.get_mpq_t(), row.vals[i].get_mpq_t());
            mpq_add(acc[c].get_mpq_t(), acc[c].get_mpq_t(), tmp.get_mpq_t());
        }
    }

    void emit(Column c, SparseRow &out)
    {
        if (acc[c] != 0) {
            out.cols.push_back(c);
            out.vals.push_back(acc[c]);
            acc[c] = 0;
        }
    }
};

Accumulator &scratch()
{
    thread_local Accumulator a;
    return a;
}

} // namespace

SparseRow Echelon::reduce_leading(SparseRow row) const
{
    if (row.empty() || !pivot_index_.contains(row.cols.front()))
        return row;
    Accumulator &a = scratch();
    a.load(row);
    SparseRow out;
    bool leading_found = false;
    Rational f;
    while (!a.heap.empty()) {
        const Column c = a.pop();
        if (leading_found) {
            a.emit(c, out);
            continue;
        }
        if (a.acc[c] == 0)
            continue;
        const auto it = pivot_index_.find(c);
        if (it == pivot_index_.end()) {
            leading_found = true;
            a.emit(c, out);
            continue;
        }
        f = -a.acc[c];
        a.acc[c] = 0;
        a.add_tail(f, rows_[it->second]);
    }
    return out;
}

SparseRow Echelon::reduce(SparseRow row) const
{
    Accumulator &a = scratch();
    a.load(row);
    SparseRow out;
    Rational f;
    while (!a.heap.empty()) {
        const Column c = a.pop();
        if (a.acc[c] == 0)
            continue;
        const auto it = pivot_index_.find(c);
        if (it == pivot_index_.end()) {
            a.emit(c, out);
            continue;
        }
        f = -a.acc[c];
        a.acc[c] = 0;
        a.add_tail(f, rows_[it->second]);
    }
    return out;
}

bool Echelon::insert(SparseRow row)
{
    row = reduce_leading(std::move(row));
    if (row.empty())
        return false;
    if (row.vals.front() != 1) {
        const Rational inv = 1 / row.vals.front();
        for (auto &v : row.vals)
            v *= inv;
    }
    pivot_index_.emplace(row.cols.front(), rows_.size());
    rows_.push_back(std::move(row));
    return true;
}

std::vector<Column> Echelon::pivot_columns() const
{
    std::vector<Column> cols;
    cols.reserve(pivot_index_.size());
    for (const auto &[c, idx] : pivot_index_)
        cols.push_back(c);
    std::sort(cols.begin(), cols.end());
    return cols;
}

Echelon build_echelon(std::vector<SparseRow> rows, Execution exec, std::size_t batch)
{
    Echelon e;
    if (exec == Execution::serial || batch < 2) {
        for (auto &row : rows)
            e.insert(std::move(row));
        return e;
    }
    for (std::size_t start = 0; start < rows.size(); start += batch) {
        const std::size_t stop = std::min(rows.size(), start + batch);
        const auto lo = static_cast<std::ptrdiff_t>(start);
        const auto hi = static_cast<std::ptrdiff_t>(stop);
#pragma omp parallel for schedule(dynamic, 8)
        for (std::ptrdiff_t k = lo; k < hi; ++k)
            rows[static_cast<std::size_t>(k)] =
                e.reduce_leading(std::move(rows[static_cast<std::size_t>(k)]));
        for (std::size_t k = start; k < stop; ++k)
            e.insert(std::move(rows[k]));
    }
    return e;
}

} // namespace loopkit
