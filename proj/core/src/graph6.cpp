#include "perckit/graph6.hpp"

namespace perckit {

namespace {

constexpr int kBias = 63;

void check_body_chars(std::string_view body) {
    for (char c : body) {
        unsigned char u = static_cast<unsigned char>(c);
        if (u < 63 || u > 126)
            throw Graph6Error(Graph6Error::Kind::BadCharacter,
                              "graph6: byte " + std::to_string(int(u)) +
                                  " outside printable range [63, 126]");
    }
}

}  // namespace

Graph parse_graph6(std::string_view text) {
    if (text.empty())
        throw Graph6Error(Graph6Error::Kind::Empty, "graph6: empty input");

    size_t pos = 0;
    long n;
    if (text[0] == '~') {
        // '~~' would begin the 36-bit form for n > 258047; that range is
        // far beyond the supported order cap, so it is rejected here.
        if (text.size() >= 2 && text[1] == '~')
            throw Graph6Error(Graph6Error::Kind::BadHeader,
                              "graph6: 36-bit order form exceeds the supported range");
        if (text.size() < 4)
            throw Graph6Error(Graph6Error::Kind::BadHeader,
                              "graph6: truncated long-form order prefix");
        check_body_chars(text.substr(1, 3));
        n = 0;
        for (size_t i = 1; i <= 3; ++i)
            n = (n << 6) | (long(static_cast<unsigned char>(text[i])) - kBias);
        if (n < 63)
            throw Graph6Error(Graph6Error::Kind::BadHeader,
                              "graph6: long-form header used for order " + std::to_string(n));
        pos = 4;
    } else {
        unsigned char u = static_cast<unsigned char>(text[0]);
        if (u < 63 || u > 126)
            throw Graph6Error(Graph6Error::Kind::BadCharacter,
                              "graph6: header byte " + std::to_string(int(u)) +
                                  " outside printable range [63, 126]");
        n = long(u) - kBias;
        pos = 1;
    }

    if (n == 0)
        throw Graph6Error(Graph6Error::Kind::BadHeader,
                          "graph6: order 0 is not accepted (smallest graph is \"@\")");
    if (n > 1024)
        throw Graph6Error(Graph6Error::Kind::BadHeader,
                          "graph6: order " + std::to_string(n) + " exceeds the cap of 1024");

    const long bits = n * (n - 1) / 2;
    const size_t need = size_t((bits + 5) / 6);
    std::string_view body = text.substr(pos);
    check_body_chars(body);
    if (body.size() != need)
        throw Graph6Error(Graph6Error::Kind::BadLength,
                          "graph6: order " + std::to_string(n) + " needs " +
                              std::to_string(need) + " body bytes, got " +
                              std::to_string(body.size()));

    Graph g(static_cast<int>(n));
    long bit = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row, ++bit) {
            int value = (static_cast<unsigned char>(body[size_t(bit / 6)]) - kBias) >>
                        (5 - bit % 6) & 1;
            if (value) g.add_edge(row, col);
        }
    }
    // Any padding bits beyond the triangle must be zero.
    for (long b = bits; b < long(need) * 6; ++b) {
        int value = (static_cast<unsigned char>(body[size_t(b / 6)]) - kBias) >>
                    (5 - b % 6) & 1;
        if (value)
            throw Graph6Error(Graph6Error::Kind::BadPadding,
                              "graph6: nonzero padding bits after the adjacency triangle");
    }
    return g;
}

std::string write_graph6(const Graph& g) {
    const int n = g.order();
    if (n == 0)
        throw Graph6Error(Graph6Error::Kind::BadHeader,
                          "graph6: the empty graph has no encoding");

    std::string out;
    if (n <= 62) {
        out.push_back(char(kBias + n));
    } else {
        out.push_back('~');
        out.push_back(char(kBias + ((n >> 12) & 63)));
        out.push_back(char(kBias + ((n >> 6) & 63)));
        out.push_back(char(kBias + (n & 63)));
    }

    int acc = 0, filled = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            acc = (acc << 1) | (g.has_edge(row, col) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(char(kBias + acc));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled) out.push_back(char(kBias + (acc << (6 - filled))));
    return out;
}

}  // namespace perckit
