#include "tourn/text_format.hpp"

#include <fstream>
#include <istream>
#include <sstream>

namespace tourn {

namespace {

[[noreturn]] void fail(int line, const std::string& msg) {
    throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + msg);
}

bool next_line(std::istream& in, std::string& line, int& line_no) {
    if (!std::getline(in, line)) return false;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return true;
}

}  // namespace

std::string to_tourn_v1(const Tournament& t) {
    std::ostringstream os;
    write_tourn_v1(os, t);
    return os.str();
}

void write_tourn_v1(std::ostream& out, const Tournament& t) {
    out << t.order() << '\n';
    for (VertexId i = 0; i < t.order(); ++i) {
        for (VertexId j = 0; j < t.order(); ++j) out << (i != j && t.arc(i, j) ? '1' : '0');
        out << '\n';
    }
}

Tournament parse_tourn_v1_block(std::istream& in, int& line_no) {
    std::string line;
    if (!next_line(in, line, line_no)) fail(line_no + 1, "missing order line");
    int n = 0;
    {
        std::size_t used = 0;
        try {
            n = std::stoi(line, &used);
        } catch (const std::exception&) {
            fail(line_no, "order is not an integer");
        }
        if (used != line.size()) fail(line_no, "trailing characters after order");
    }
    if (n < 1 || n > kMaxOrder) fail(line_no, "order " + std::to_string(n) + " outside [1, 64]");

    std::vector<std::string> rows;
    for (int i = 0; i < n; ++i) {
        if (!next_line(in, line, line_no)) fail(line_no + 1, "expected row " + std::to_string(i) + ", file truncated");
        if (static_cast<int>(line.size()) != n)
            fail(line_no, "row " + std::to_string(i) + " has " + std::to_string(line.size()) + " characters, expected " +
                              std::to_string(n));
        for (char c : line)
            if (c != '0' && c != '1') fail(line_no, "unexpected character in row " + std::to_string(i));
        if (line[i] != '0') fail(line_no, "nonzero diagonal in row " + std::to_string(i));
        rows.push_back(line);
    }
    const int first_row_line = line_no - n + 1;
    std::vector<Arc> arcs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const bool ij = rows[i][j] == '1';
            const bool ji = rows[j][i] == '1';
            if (ij == ji)
                fail(first_row_line + j, "pair (" + std::to_string(i) + "," + std::to_string(j) + ") " +
                                             (ij ? "has arcs both ways" : "is not joined"));
            arcs.emplace_back(ij ? i : j, ij ? j : i);
        }
    return Tournament::from_arcs(n, arcs);
}

Tournament parse_tourn_v1(std::istream& in) {
    int line_no = 0;
    Tournament t = parse_tourn_v1_block(in, line_no);
    std::string line;
    while (next_line(in, line, line_no))
        if (line.find_first_not_of(" \t") != std::string::npos) fail(line_no, "unexpected content after tournament");
    return t;
}

Tournament parse_tourn_v1(const std::string& text) {
    std::istringstream is(text);
    return parse_tourn_v1(is);
}

Tournament read_tourn_v1(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw Error(ErrorKind::ParseError, "cannot open " + file.string());
    return parse_tourn_v1(in);
}

}  // namespace tourn
