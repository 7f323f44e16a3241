#include "rmlab/matrix_io.hpp"

#include <charconv>
#include <istream>
#include <optional>
#include <ostream>
#include <type_traits>

namespace rmlab {

MatrixParseError::MatrixParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                         message),
      line_(line),
      column_(column) {}

namespace {

void write_comments(std::ostream& out, const std::vector<std::string>& comments) {
    for (const auto& c : comments) {
        out << "# " << c << '\n';
    }
}

// Cursor over one line; columns are 1-based for diagnostics.
class LineScanner {
public:
    LineScanner(const std::string& text, std::size_t line) : text_(text), line_(line) {}

    void skip_spaces() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\r')) {
            ++pos_;
        }
    }
    [[nodiscard]] bool at_end() {
        skip_spaces();
        return pos_ >= text_.size();
    }
    [[nodiscard]] std::size_t column() const { return pos_ + 1; }

    [[noreturn]] void fail(const std::string& message) const {
        throw MatrixParseError(line_, column(), message);
    }

    std::uint64_t number(const char* what) {
        skip_spaces();
        std::uint64_t value = 0;
        const char* first = text_.data() + pos_;
        const char* last = text_.data() + text_.size();
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc{} || ptr == first) {
            fail(std::string("expected ") + what);
        }
        pos_ += static_cast<std::size_t>(ptr - first);
        return value;
    }

    std::string word() {
        skip_spaces();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && text_[pos_] != ' ' && text_[pos_] != '\t' && text_[pos_] != '\r') {
            ++pos_;
        }
        return text_.substr(start, pos_ - start);
    }

    void expect(char c) {
        if (pos_ >= text_.size() || text_[pos_] != c) {
            fail(std::string("expected '") + c + "'");
        }
        ++pos_;
    }

private:
    const std::string& text_;
    std::size_t line_;
    std::size_t pos_ = 0;
};

bool is_blank_or_comment(const std::string& line) {
    for (const char c : line) {
        if (c == '#') {
            return true;
        }
        if (c != ' ' && c != '\t' && c != '\r') {
            return false;
        }
    }
    return true;
}

}  // namespace

void write_matrix(std::ostream& out, const BitMatrix& m, const std::vector<std::string>& comments) {
    write_comments(out, comments);
    out << "rmlab-matrix " << m.n_rows() << ' ' << m.n_cols() << " gf2\n";
    for (std::size_t c = 0; c < m.n_cols(); ++c) {
        out << c << ':';
        for (std::size_t r = 0; r < m.n_rows(); ++r) {
            if (m.get(r, c)) {
                out << ' ' << r << ":1";
            }
        }
        out << '\n';
    }
}

void write_matrix(std::ostream& out, const PrimeFieldMatrix& m, const std::vector<std::string>& comments) {
    write_comments(out, comments);
    out << "rmlab-matrix " << m.n_rows() << ' ' << m.n_cols() << " gf" << m.modulus() << '\n';
    for (std::size_t c = 0; c < m.n_cols(); ++c) {
        out << c << ':';
        for (std::size_t r = 0; r < m.n_rows(); ++r) {
            if (const Residue v = m.get(r, c); v != 0) {
                out << ' ' << r << ':' << v;
            }
        }
        out << '\n';
    }
}

std::vector<std::string> read_comments(std::istream& in) {
    std::vector<std::string> out;
    std::string line;
    while (std::getline(in, line)) {
        const auto start = line.find_first_not_of(" \t");
        if (start == std::string::npos) {
            continue;
        }
        if (line[start] != '#') {
            break;
        }
        std::string body = line.substr(start + 1);
        if (!body.empty() && body.front() == ' ') {
            body.erase(0, 1);
        }
        out.push_back(std::move(body));
    }
    return out;
}

AnyMatrix read_matrix(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;

    std::optional<AnyMatrix> result;
    std::size_t rows = 0, cols = 0;
    Residue p = 2;
    std::size_t next_col = 0;

    while (std::getline(in, line)) {
        ++line_no;
        if (!result) {
            if (is_blank_or_comment(line)) {
                continue;
            }
            LineScanner sc(line, line_no);
            if (sc.word() != "rmlab-matrix") {
                throw MatrixParseError(line_no, 1, "expected header 'rmlab-matrix <rows> <cols> <field>'");
            }
            rows = sc.number("row count");
            cols = sc.number("column count");
            const std::size_t field_col = (sc.skip_spaces(), sc.column());
            const std::string field = sc.word();
            if (rows == 0 || cols == 0) {
                throw MatrixParseError(line_no, field_col, "dimensions must be positive");
            }
            if (field.size() < 3 || field.rfind("gf", 0) != 0) {
                throw MatrixParseError(line_no, field_col, "field must be gf2 or gf<p>");
            }
            std::uint64_t order = 0;
            const auto [ptr, ec] = std::from_chars(field.data() + 2, field.data() + field.size(), order);
            if (ec != std::errc{} || ptr != field.data() + field.size() || !is_prime(order) ||
                order > PrimeFieldMatrix::kMaxModulus) {
                throw MatrixParseError(line_no, field_col, "field order '" + field.substr(2) + "' is not a supported prime");
            }
            if (!sc.at_end()) {
                sc.fail("unexpected trailing text after header");
            }
            p = static_cast<Residue>(order);
            if (p == 2) {
                result.emplace(std::in_place_type<BitMatrix>, rows, cols);
            } else {
                result.emplace(std::in_place_type<PrimeFieldMatrix>, p, rows, cols);
            }
            continue;
        }
        if (is_blank_or_comment(line)) {
            continue;
        }
        LineScanner sc(line, line_no);
        const std::size_t col_pos = (sc.skip_spaces(), sc.column());
        const std::uint64_t col = sc.number("column index");
        if (col != next_col) {
            throw MatrixParseError(line_no, col_pos,
                                   "expected column " + std::to_string(next_col) + ", found " + std::to_string(col));
        }
        if (col >= cols) {
            throw MatrixParseError(line_no, col_pos, "more column lines than declared");
        }
        sc.expect(':');
        std::optional<std::uint64_t> prev_row;
        while (!sc.at_end()) {
            const std::size_t entry_pos = sc.column();
            const std::uint64_t row = sc.number("row index");
            sc.expect(':');
            const std::size_t value_pos = sc.column();
            const std::uint64_t value = sc.number("entry value");
            if (row >= rows) {
                throw MatrixParseError(line_no, entry_pos, "row index " + std::to_string(row) + " out of range");
            }
            if (prev_row && row <= *prev_row) {
                throw MatrixParseError(line_no, entry_pos, "row indices must be strictly increasing");
            }
            if (value == 0 || value >= p) {
                throw MatrixParseError(line_no, value_pos, "entry value must lie in [1, p)");
            }
            prev_row = row;
            std::visit(
                [&](auto& m) {
                    if constexpr (std::is_same_v<std::decay_t<decltype(m)>, BitMatrix>) {
                        m.set(row, col);
                    } else {
                        m.set(row, col, value);
                    }
                },
                *result);
        }
        ++next_col;
    }
    if (!result) {
        throw MatrixParseError(line_no + 1, 1, "missing 'rmlab-matrix' header");
    }
    if (next_col != cols) {
        throw MatrixParseError(line_no + 1, 1,
                               "expected " + std::to_string(cols) + " column lines, found " + std::to_string(next_col));
    }
    return std::move(*result);
}

}  // namespace rmlab
