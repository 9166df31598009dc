#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "slq/graph.hpp"

namespace slq {

// graph6 text codec. Layout, per the public format description:
//   header: n+63 for n <= 62; '~' then three 6-bit bytes for 63 <= n <= 258047;
//           '~~' then six 6-bit bytes above that (decoded, never emitted here).
//   body:   upper-triangle bits in column order (columns j = 1..n-1, rows
//           i = 0..j-1), packed big-endian into 6-bit groups, zero padded,
//           each group offset by 63 into the printable range 63..126.

enum class Graph6ErrorKind { bad_header, out_of_range_char, trailing_garbage, truncated };

class graph6_error : public std::runtime_error {
public:
    graph6_error(Graph6ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    Graph6ErrorKind kind() const noexcept { return kind_; }

private:
    Graph6ErrorKind kind_;
};

inline std::string graph6_encode(const Graph& g) {
    const long long n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    } else {
        throw std::invalid_argument("graph6_encode: order above 258047 not supported");
    }
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return out;
}

inline Graph graph6_decode(std::string_view s) {
    constexpr std::string_view kPrefix = ">>graph6<<";
    if (s.substr(0, kPrefix.size()) == kPrefix) s.remove_prefix(kPrefix.size());
    if (s.empty()) throw graph6_error(Graph6ErrorKind::bad_header, "graph6: empty input");

    std::size_t pos = 0;
    auto sixbits = [&](const char* what) {
        if (pos >= s.size())
            throw graph6_error(Graph6ErrorKind::truncated,
                               std::string("graph6: input ends inside ") + what);
        const unsigned char c = static_cast<unsigned char>(s[pos]);
        if (c < 63 || c > 126)
            throw graph6_error(Graph6ErrorKind::out_of_range_char,
                               "graph6: byte " + std::to_string(pos) + " (value " +
                                   std::to_string(int(c)) + ") outside 63..126");
        ++pos;
        return static_cast<long long>(c - 63);
    };

    long long n;
    if (s[0] != '~') {
        n = sixbits("size header");
    } else {
        ++pos;
        if (pos < s.size() && s[pos] == '~') {
            ++pos;
            n = 0;
            for (int i = 0; i < 6; ++i) n = (n << 6) | sixbits("size header");
        } else {
            n = 0;
            for (int i = 0; i < 3; ++i) n = (n << 6) | sixbits("size header");
        }
    }
    if (n < 1)
        throw graph6_error(Graph6ErrorKind::bad_header,
                           "graph6: order " + std::to_string(n) + " not supported");
    if (n > 258047)
        throw graph6_error(Graph6ErrorKind::bad_header,
                           "graph6: order " + std::to_string(n) + " too large");

    const long long nbits = n * (n - 1) / 2;
    const long long nbytes = (nbits + 5) / 6;
    if (static_cast<long long>(s.size()) - static_cast<long long>(pos) < nbytes)
        throw graph6_error(Graph6ErrorKind::truncated,
                           "graph6: body needs " + std::to_string(nbytes) + " bytes, got " +
                               std::to_string(s.size() - pos));
    if (static_cast<long long>(s.size()) - static_cast<long long>(pos) > nbytes)
        throw graph6_error(Graph6ErrorKind::trailing_garbage,
                           "graph6: " +
                               std::to_string(s.size() - pos - nbytes) +
                               " extra byte(s) after the adjacency body");

    GraphBuilder b(static_cast<int>(n));
    long long acc = 0;
    int have = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            if (have == 0) {
                acc = sixbits("adjacency body");
                have = 6;
            }
            if ((acc >> (have - 1)) & 1) b.edge(i, static_cast<int>(j));
            --have;
        }
    if (have > 0 && (acc & ((1 << have) - 1)) != 0)
        throw graph6_error(Graph6ErrorKind::trailing_garbage,
                           "graph6: nonzero padding bits in final byte");
    return b.build();
}

} // namespace slq
