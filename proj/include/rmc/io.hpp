#pragma once

#include <cctype>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "rmc/alphabet.hpp"
#include "rmc/errors.hpp"
#include "rmc/matrix.hpp"
#include "rmc/outcome.hpp"

namespace rmc {

/// Parsed instance file: optional alphabet declaration, matrix rows of
/// whitespace-separated tokens ("*" marks a missing entry), optional budget
/// line "d: v" (uniform) or "d: v1 ... vn". "#" starts a comment line.
struct ParsedInstance {
    Alphabet alphabet;
    bool alphabet_declared = false;
    IncompleteMatrix matrix;
    std::optional<std::vector<int>> budgets;

    ConRmcInstance with_budgets(std::vector<int> b) const {
        return ConRmcInstance(matrix, std::move(b), alphabet);
    }
};

namespace detail {

struct Token {
    std::string text;
    int column; // 1-based character offset
};

inline std::vector<Token> tokenize_line(const std::string& line) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < line.size()) {
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])))
            ++i;
        out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
    }
    return out;
}

inline int parse_int(const Token& tok, int line_no) {
    try {
        size_t used = 0;
        int v = std::stoi(tok.text, &used);
        if (used != tok.text.size())
            throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw FormatError("expected an integer, got '" + tok.text + "'", line_no, tok.column);
    }
}

} // namespace detail

inline ParsedInstance parse_instance(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;

    std::vector<std::string> declared;
    bool has_declaration = false;
    int declaration_line = 1;
    std::vector<std::vector<detail::Token>> row_tokens;
    std::vector<int> row_lines;
    std::optional<std::vector<int>> budgets;

    while (std::getline(in, line)) {
        ++line_no;
        std::vector<detail::Token> toks = detail::tokenize_line(line);
        if (toks.empty() || toks.front().text[0] == '#')
            continue;

        if (toks.front().text == "alphabet:") {
            if (has_declaration)
                throw FormatError("duplicate alphabet declaration", line_no, toks.front().column);
            if (!row_tokens.empty())
                throw FormatError("alphabet declaration must precede the matrix rows", line_no,
                                  toks.front().column);
            if (toks.size() == 1)
                throw FormatError("empty alphabet declaration", line_no, toks.front().column);
            for (size_t t = 1; t < toks.size(); ++t) {
                if (toks[t].text == "alphabet:" || toks[t].text == "d:")
                    throw FormatError("token '" + toks[t].text + "' is reserved", line_no,
                                      toks[t].column);
                declared.push_back(toks[t].text);
            }
            has_declaration = true;
            declaration_line = line_no;
            continue;
        }
        if (toks.front().text == "d:") {
            if (budgets)
                throw FormatError("duplicate budget line", line_no, toks.front().column);
            if (toks.size() == 1)
                throw FormatError("empty budget line", line_no, toks.front().column);
            budgets.emplace();
            for (size_t t = 1; t < toks.size(); ++t)
                budgets->push_back(detail::parse_int(toks[t], line_no));
            continue;
        }
        if (budgets)
            throw FormatError("matrix row after the budget line", line_no, toks.front().column);
        row_tokens.push_back(std::move(toks));
        row_lines.push_back(line_no);
    }

    if (row_tokens.empty())
        throw FormatError("file contains no matrix rows", line_no == 0 ? 1 : line_no, 1);
    const size_t cols = row_tokens.front().size();
    for (size_t r = 1; r < row_tokens.size(); ++r)
        if (row_tokens[r].size() != cols)
            throw FormatError("row has " + std::to_string(row_tokens[r].size()) +
                                  " entries, expected " + std::to_string(cols),
                              row_lines[r], row_tokens[r].front().column);

    ParsedInstance out;
    out.alphabet_declared = has_declaration;
    std::vector<std::string> interned;
    auto intern = [&](const detail::Token& tok, int ln) -> int {
        for (size_t s = 0; s < interned.size(); ++s)
            if (interned[s] == tok.text)
                return static_cast<int>(s);
        if (has_declaration)
            throw FormatError("token '" + tok.text + "' is not in the declared alphabet", ln,
                              tok.column);
        if (tok.text == "alphabet:" || tok.text == "d:")
            throw FormatError("token '" + tok.text + "' is reserved", ln, tok.column);
        interned.push_back(tok.text);
        return static_cast<int>(interned.size()) - 1;
    };
    if (has_declaration) {
        interned = declared;
        try {
            out.alphabet = Alphabet(declared);
        } catch (const UsageError& e) {
            throw FormatError(e.what(), declaration_line, 1);
        }
    }

    std::vector<Cell> cells;
    cells.reserve(row_tokens.size() * cols);
    for (size_t r = 0; r < row_tokens.size(); ++r)
        for (const detail::Token& tok : row_tokens[r])
            cells.push_back(tok.text == "*" ? Cell::wildcard()
                                            : Cell::filled(intern(tok, row_lines[r])));
    if (!has_declaration)
        out.alphabet = interned.empty() ? Alphabet::synthetic() : Alphabet(interned);

    out.matrix = IncompleteMatrix(static_cast<int>(row_tokens.size()), static_cast<int>(cols),
                                  std::move(cells));

    if (budgets) {
        if (budgets->size() == 1)
            budgets->assign(row_tokens.size(), budgets->front());
        else if (budgets->size() != row_tokens.size())
            throw FormatError("budget line must hold 1 or n values", line_no, 1);
        out.budgets = budgets;
    }
    return out;
}

inline std::string serialize_instance(const ParsedInstance& inst) {
    std::ostringstream os;
    if (inst.alphabet_declared) {
        os << "alphabet:";
        for (const std::string& t : inst.alphabet.tokens())
            os << ' ' << t;
        os << '\n';
    }
    for (int i = 0; i < inst.matrix.rows(); ++i) {
        for (int j = 0; j < inst.matrix.cols(); ++j) {
            if (j)
                os << ' ';
            Cell c = inst.matrix.at(i, j);
            os << (c.is_wildcard() ? "*" : inst.alphabet.token(c.code));
        }
        os << '\n';
    }
    if (inst.budgets) {
        os << "d:";
        bool uniform = true;
        for (int b : *inst.budgets)
            uniform = uniform && b == inst.budgets->front();
        if (uniform && !inst.budgets->empty()) {
            os << ' ' << inst.budgets->front();
        } else {
            for (int b : *inst.budgets)
                os << ' ' << b;
        }
        os << '\n';
    }
    return os.str();
}

/// Witness file: whitespace-separated symbol tokens, comments allowed.
inline Witness parse_witness(const std::string& text, const Alphabet& alphabet) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    Witness w;
    while (std::getline(in, line)) {
        ++line_no;
        for (const detail::Token& tok : detail::tokenize_line(line)) {
            if (tok.text[0] == '#')
                break;
            int id = alphabet.id_of(tok.text);
            if (id < 0)
                throw FormatError("witness token '" + tok.text + "' is not in the alphabet",
                                  line_no, tok.column);
            w.push_back(id);
        }
    }
    return w;
}

inline std::string format_witness(const Witness& w, const Alphabet& alphabet) {
    std::ostringstream os;
    for (size_t j = 0; j < w.size(); ++j) {
        if (j)
            os << ' ';
        os << alphabet.token(w[j]);
    }
    return os.str();
}

} // namespace rmc
