#pragma once

// Text fixture format, one column per line:
//
//   # comment lines start with '#'
//   rmlab-matrix <n_rows> <n_cols> <field>      field: gf2 | gf<p>
//   0: 0:1 17:1 254:1
//   1: 1:1 3:2
//   2:
//   ...
//
// Column lines appear in order 0..n_cols-1; entries are "row:value" with rows
// strictly increasing and 0 < value < p. The writer emits exactly this
// canonical form, so write(read(text)) == text for canonical input.

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "rmlab/bit_matrix.hpp"
#include "rmlab/prime_field_matrix.hpp"

namespace rmlab {

using AnyMatrix = std::variant<BitMatrix, PrimeFieldMatrix>;

class MatrixParseError : public std::runtime_error {
public:
    MatrixParseError(std::size_t line, std::size_t column, const std::string& message);

    [[nodiscard]] std::size_t line() const { return line_; }
    [[nodiscard]] std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// `comments` are emitted as "# ..." lines ahead of the header.
void write_matrix(std::ostream& out, const BitMatrix& m, const std::vector<std::string>& comments = {});
void write_matrix(std::ostream& out, const PrimeFieldMatrix& m,
                  const std::vector<std::string>& comments = {});

/// Throws MatrixParseError with 1-based line/column of the offending token.
[[nodiscard]] AnyMatrix read_matrix(std::istream& in);

/// Comment lines ("# ..." with the marker stripped) seen before the header.
[[nodiscard]] std::vector<std::string> read_comments(std::istream& in);

}  // namespace rmlab
