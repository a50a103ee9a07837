// Copyright (c) 2026 gapmor contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "gapmor/lti/state_space.hpp"

namespace gapmor {

// Plain-text system container (see docs/format.md):
//   lti <n> <m> <p>
//   A <nnz>
//   <row> <col> <value>      (1-based coordinate triplets)
//   B <nnz> ... C <nnz> ... [D <nnz> ...]
// Values print with 17 significant digits so doubles round-trip bit exactly.

namespace detail {

class TokenReader {
  public:
    explicit TokenReader(std::istream& in) : in_(in) {}

    /// Returns the next whitespace-separated token; empty at end of input.
    std::string next() {
        std::string tok;
        for (;;) {
            const int c = in_.get();
            if (c == EOF) return tok;
            if (c == '\n') {
                ++line_;
                col_ = 0;
                if (!tok.empty()) return tok;
                continue;
            }
            ++col_;
            if (c == ' ' || c == '\t' || c == '\r') {
                if (!tok.empty()) return tok;
                continue;
            }
            if (tok.empty()) tok_col_ = col_;
            tok.push_back(static_cast<char>(c));
        }
    }

    [[noreturn]] void fail(const std::string& msg) const {
        raise(ErrorCode::ParseError, "line " + std::to_string(line_) + ", column " +
                                         std::to_string(tok_col_) + ": " + msg);
    }

    Index next_index(const char* what) {
        const std::string tok = next();
        if (tok.empty()) fail(std::string("unexpected end of file, expected ") + what);
        std::size_t pos = 0;
        long v = 0;
        try {
            v = std::stol(tok, &pos);
        } catch (...) {
            fail("expected integer " + std::string(what) + ", got '" + tok + "'");
        }
        if (pos != tok.size() || v < 0)
            fail("expected nonnegative integer " + std::string(what) + ", got '" + tok + "'");
        return static_cast<Index>(v);
    }

    double next_double(const char* what) {
        const std::string tok = next();
        if (tok.empty()) fail(std::string("unexpected end of file, expected ") + what);
        std::size_t pos = 0;
        double v = 0.0;
        try {
            v = std::stod(tok, &pos);
        } catch (...) {
            fail("expected number " + std::string(what) + ", got '" + tok + "'");
        }
        if (pos != tok.size()) fail("trailing characters in number '" + tok + "'");
        return v;
    }

  private:
    std::istream& in_;
    long line_ = 1;
    long col_ = 0;
    long tok_col_ = 0;
};

inline void write_coordinate_section(std::ostream& out, const char* name, const Matrix& M) {
    Index nnz = 0;
    for (Index i = 0; i < M.rows(); ++i)
        for (Index j = 0; j < M.cols(); ++j)
            if (M(i, j) != 0.0) ++nnz;
    out << name << ' ' << nnz << '\n';
    char buf[64];
    for (Index i = 0; i < M.rows(); ++i)
        for (Index j = 0; j < M.cols(); ++j)
            if (M(i, j) != 0.0) {
                std::snprintf(buf, sizeof(buf), "%.17g", M(i, j));
                out << (i + 1) << ' ' << (j + 1) << ' ' << buf << '\n';
            }
}

inline Matrix read_coordinate_section(TokenReader& tr, const char* name, Index rows, Index cols) {
    const std::string head = tr.next();
    if (head != name)
        tr.fail("expected section '" + std::string(name) + "', got '" + head + "'");
    const Index nnz = tr.next_index("entry count");
    Matrix M = Matrix::Zero(rows, cols);
    for (Index k = 0; k < nnz; ++k) {
        const Index i = tr.next_index("row index");
        const Index j = tr.next_index("column index");
        const double v = tr.next_double("value");
        if (i < 1 || i > rows || j < 1 || j > cols)
            raise(ErrorCode::DimensionMismatch,
                  std::string(name) + " entry (" + std::to_string(i) + ", " + std::to_string(j) +
                      ") outside the " + std::to_string(rows) + "x" + std::to_string(cols) +
                      " shape declared in the header");
        M(i - 1, j - 1) = v;
    }
    return M;
}

}  // namespace detail

inline void write_system(const StateSpace& sys, std::ostream& out) {
    out << "lti " << sys.order() << ' ' << sys.inputs() << ' ' << sys.outputs() << '\n';
    detail::write_coordinate_section(out, "A", sys.A);
    detail::write_coordinate_section(out, "B", sys.B);
    detail::write_coordinate_section(out, "C", sys.C);
    if (!sys.strictly_proper()) detail::write_coordinate_section(out, "D", sys.D);
}

inline void write_system(const StateSpace& sys, const std::string& path) {
    std::ofstream out(path);
    if (!out) raise(ErrorCode::IoError, "cannot open '" + path + "' for writing");
    write_system(sys, out);
    out.flush();
    if (!out) raise(ErrorCode::IoError, "write to '" + path + "' failed");
}

inline StateSpace read_system(std::istream& in) {
    detail::TokenReader tr(in);
    const std::string magic = tr.next();
    if (magic != "lti") tr.fail("expected header 'lti n m p', got '" + magic + "'");
    const Index n = tr.next_index("state dimension");
    const Index m = tr.next_index("input dimension");
    const Index p = tr.next_index("output dimension");
    if (n < 1 || m < 1 || p < 1) tr.fail("header dimensions must be positive");
    Matrix A = detail::read_coordinate_section(tr, "A", n, n);
    Matrix B = detail::read_coordinate_section(tr, "B", n, m);
    Matrix C = detail::read_coordinate_section(tr, "C", p, n);
    // optional feedthrough section
    const std::string tail = tr.next();
    if (tail == "D") {
        const Index nnz = tr.next_index("entry count");
        Matrix D = Matrix::Zero(p, m);
        for (Index k = 0; k < nnz; ++k) {
            const Index i = tr.next_index("row index");
            const Index j = tr.next_index("column index");
            const double v = tr.next_double("value");
            if (i < 1 || i > p || j < 1 || j > m)
                raise(ErrorCode::DimensionMismatch, "D entry outside declared shape");
            D(i - 1, j - 1) = v;
        }
        return {std::move(A), std::move(B), std::move(C), std::move(D)};
    }
    if (!tail.empty()) tr.fail("unexpected trailing content '" + tail + "'");
    return {std::move(A), std::move(B), std::move(C)};
}

inline StateSpace read_system(const std::string& path) {
    std::ifstream in(path);
    if (!in) raise(ErrorCode::IoError, "cannot open '" + path + "' for reading");
    return read_system(in);
}

}  // namespace gapmor
