#pragma once

#include "whittle/complex.hpp"
#include "whittle/cyclic_cover.hpp"
#include "whittle/errors.hpp"
#include "whittle/simplicial_map.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace whittle {

namespace detail {

// strip a trailing comment and surrounding whitespace
inline std::string logical_line(const std::string& raw)
{
    std::string s = raw.substr(0, raw.find('#'));
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos)
        return "";
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

inline int parse_int(const std::string& token, int line)
{
    try {
        std::size_t used = 0;
        int v = std::stoi(token, &used);
        if (used != token.size())
            throw std::invalid_argument("trailing junk");
        return v;
    } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(line) + ": expected an integer, got '" +
                             token + "'",
                         line);
    }
}

} // namespace detail

/// SCX: one maximal simplex per non-comment line as whitespace-separated
/// vertex ids; the complex is the downward closure.
inline SimplicialComplex parse_scx(const std::string& text)
{
    std::istringstream in(text);
    std::string raw;
    std::vector<Simplex> maximal;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        std::string s = detail::logical_line(raw);
        if (s.empty())
            continue;
        std::istringstream toks(s);
        std::string tok;
        Simplex simplex;
        while (toks >> tok)
            simplex.push_back(detail::parse_int(tok, line));
        maximal.push_back(std::move(simplex));
    }
    return close_downward(maximal);
}

/// Writers emit maximal simplices sorted lexicographically.
inline std::string write_scx(const SimplicialComplex& k)
{
    std::string out;
    for (const auto& s : k.maximal_simplices()) {
        for (std::size_t i = 0; i < s.size(); ++i)
            out += (i ? " " : "") + std::to_string(s[i]);
        out += "\n";
    }
    return out;
}

/// SMAP: lines "y -> x"; every source vertex exactly once.
inline std::vector<std::pair<int, int>> parse_smap(const std::string& text)
{
    std::istringstream in(text);
    std::string raw;
    std::vector<std::pair<int, int>> out;
    std::set<int> seen;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        std::string s = detail::logical_line(raw);
        if (s.empty())
            continue;
        std::istringstream toks(s);
        std::string a, arrow, b, extra;
        toks >> a >> arrow >> b;
        if (arrow != "->" || b.empty() || (toks >> extra))
            throw ParseError("line " + std::to_string(line) + ": expected 'y -> x'", line);
        int y = detail::parse_int(a, line);
        int x = detail::parse_int(b, line);
        if (!seen.insert(y).second)
            throw ParseError("line " + std::to_string(line) + ": vertex " + std::to_string(y) +
                                 " mapped twice",
                             line);
        out.emplace_back(y, x);
    }
    return out;
}

inline std::string write_smap(const SimplicialMap& f)
{
    std::string out;
    for (const auto& [y, x] : f.vertex_map())
        out += std::to_string(y) + " -> " + std::to_string(x) + "\n";
    return out;
}

/// Builds the simplicial map from SMAP entries, checking the assignment
/// is total on the source and mentions nothing else.
inline SimplicialMap simplicial_map_from_entries(const SimplicialComplex& source,
                                                 const SimplicialComplex& target,
                                                 const std::vector<std::pair<int, int>>& entries)
{
    std::map<int, int> vm(entries.begin(), entries.end());
    auto verts = source.vertices();
    for (const auto& [y, x] : vm)
        if (!verts.count(y))
            throw Error("map file mentions vertex " + std::to_string(y) +
                        " which is not in the source complex");
    for (int v : verts)
        if (!vm.count(v))
            throw Error("map file gives no image for source vertex " + std::to_string(v));
    return SimplicialMap(source, target, std::move(vm));
}

/// SLAB: "mod n" on the first non-comment line, then "u v g" lines;
/// unlisted edges default to 0; antisymmetric closure applied on load.
struct SlabData {
    int n = 1;
    std::map<std::pair<int, int>, int> entries;
};

inline SlabData parse_slab(const std::string& text)
{
    std::istringstream in(text);
    std::string raw;
    SlabData out;
    bool have_mod = false;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        std::string s = detail::logical_line(raw);
        if (s.empty())
            continue;
        std::istringstream toks(s);
        if (!have_mod) {
            std::string kw, val, extra;
            toks >> kw >> val;
            if (kw != "mod" || val.empty() || (toks >> extra))
                throw ParseError("line " + std::to_string(line) + ": expected 'mod n'", line);
            out.n = detail::parse_int(val, line);
            if (out.n < 1)
                throw ParseError("line " + std::to_string(line) + ": modulus must be >= 1",
                                 line);
            have_mod = true;
            continue;
        }
        std::string a, b, g, extra;
        toks >> a >> b >> g;
        if (g.empty() || (toks >> extra))
            throw ParseError("line " + std::to_string(line) + ": expected 'u v g'", line);
        int u = detail::parse_int(a, line);
        int v = detail::parse_int(b, line);
        int val = detail::parse_int(g, line);
        auto key = std::make_pair(u, v);
        if (out.entries.count(key) || out.entries.count({v, u}))
            throw ParseError("line " + std::to_string(line) + ": edge listed twice", line);
        out.entries[key] = val;
    }
    if (!have_mod)
        throw ParseError("missing 'mod n' line", line);
    return out;
}

inline std::string write_slab(const CyclicCoverLabeling& w)
{
    std::string out = "mod " + std::to_string(w.modulus()) + "\n";
    for (const auto& s : w.complex().simplices())
        if (s.size() == 2 && w.omega(s[0], s[1]) != 0)
            out += std::to_string(s[0]) + " " + std::to_string(s[1]) + " " +
                   std::to_string(w.omega(s[0], s[1])) + "\n";
    return out;
}

inline std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot read file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_file(const std::string& path, const std::string& content)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error("cannot write file: " + path);
    out << content;
}

} // namespace whittle
