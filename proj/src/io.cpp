#include "hsurf/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "hsurf/error.hpp"

namespace hsurf {

namespace {

[[noreturn]] void parse_fail(const std::string& file, int line, const std::string& msg) {
    fail(ErrorKind::Validation, file + ":" + std::to_string(line) + ": " + msg);
}

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) {
        if (tok[0] == '#') break;
        out.push_back(tok);
    }
    return out;
}

}  // namespace

SurfaceFile parse_surface(std::istream& in, const std::string& filename) {
    SurfaceFile doc;
    std::map<std::string, int> edge_index;
    std::map<std::string, int> face_index;
    std::string line;
    int lineno = 0;
    std::vector<std::pair<int, std::vector<std::string>>> cusp_lines;

    while (std::getline(in, line)) {
        ++lineno;
        const auto tok = tokenize(line);
        if (tok.empty()) continue;
        const std::string& kw = tok[0];

        if (kw == "surface") {
            if (tok.size() != 2) parse_fail(filename, lineno, "surface line needs a name");
            doc.name = tok[1];
        } else if (kw == "meta") {
            if (tok.size() != 3) parse_fail(filename, lineno, "meta line needs a key and a value");
            try {
                if (tok[1] == "genus") doc.expected_genus = std::stoi(tok[2]);
                else if (tok[1] == "cusps") doc.expected_cusps = std::stoi(tok[2]);
                else parse_fail(filename, lineno, "unknown meta key '" + tok[1] + "'");
            } catch (const std::invalid_argument&) {
                parse_fail(filename, lineno, "meta value is not an integer");
            }
        } else if (kw == "edge") {
            if (tok.size() != 3) parse_fail(filename, lineno, "edge line: expected 'edge <id> <length>'");
            if (edge_index.count(tok[1])) parse_fail(filename, lineno, "duplicate edge id '" + tok[1] + "'");
            double len = 0;
            const auto res = std::from_chars(tok[2].data(), tok[2].data() + tok[2].size(), len);
            if (res.ec != std::errc() || res.ptr != tok[2].data() + tok[2].size())
                parse_fail(filename, lineno, "bad edge length '" + tok[2] + "'");
            if (!(len > 0)) parse_fail(filename, lineno, "edge length must be positive");
            edge_index[tok[1]] = doc.surface.tri.edge_count();
            doc.surface.tri.edge_names.push_back(tok[1]);
            doc.surface.lengths.push_back(len);
        } else if (kw == "face") {
            if (tok.size() < 3) parse_fail(filename, lineno, "face line: expected a face id and a kind");
            if (face_index.count(tok[1])) parse_fail(filename, lineno, "duplicate face id '" + tok[1] + "'");
            CombTriangulation::Face f;
            auto edge_of = [&](const std::string& id) {
                auto it = edge_index.find(id);
                if (it == edge_index.end())
                    parse_fail(filename, lineno, "face references undeclared edge '" + id + "'");
                return it->second;
            };
            if (tok[2] == "compact") {
                if (tok.size() != 6) parse_fail(filename, lineno, "compact face needs three edge ids");
                f.cusp = false;
                for (int i = 0; i < 3; ++i) f.edges[i] = edge_of(tok[3 + i]);
            } else if (tok[2] == "cusp") {
                if (tok.size() != 4) parse_fail(filename, lineno, "cusp face needs one chord edge id");
                f.cusp = true;
                f.edges[0] = edge_of(tok[3]);
            } else {
                parse_fail(filename, lineno, "face kind must be 'compact' or 'cusp'");
            }
            face_index[tok[1]] = doc.surface.tri.face_count();
            doc.surface.tri.faces.push_back(f);
            doc.surface.tri.face_names.push_back(tok[1]);
        } else if (kw == "cusp") {
            if (tok.size() < 3) parse_fail(filename, lineno, "cusp line: expected 'cusp <id> <face>...'");
            cusp_lines.emplace_back(lineno, std::vector<std::string>(tok.begin() + 2, tok.end()));
        } else {
            parse_fail(filename, lineno, "unknown keyword '" + kw + "'");
        }
    }

    for (const auto& [ln, ids] : cusp_lines) {
        std::vector<int> cyc;
        for (const auto& id : ids) {
            auto it = face_index.find(id);
            if (it == face_index.end()) parse_fail(filename, ln, "cusp cycle references unknown face '" + id + "'");
            cyc.push_back(it->second);
        }
        doc.surface.tri.cusp_cycles.push_back(std::move(cyc));
    }

    // Surface-level structural checks with file context.
    std::vector<int> uses(doc.surface.tri.edge_count(), 0);
    for (const auto& f : doc.surface.tri.faces) {
        const int n = f.cusp ? 1 : 3;
        for (int s = 0; s < n; ++s) ++uses[f.edges[s]];
    }
    for (int e = 0; e < doc.surface.tri.edge_count(); ++e)
        if (uses[e] != 2)
            fail(ErrorKind::Validation, filename + ": edge '" + doc.surface.tri.edge_names[e] +
                                            "' is used " + std::to_string(uses[e]) + " times, expected 2");
    return doc;
}

SurfaceFile parse_surface_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::Validation, "cannot open '" + path + "'");
    return parse_surface(in, path);
}

std::string serialize_surface(const SurfaceFile& f) {
    std::ostringstream out;
    if (!f.name.empty()) out << "surface " << f.name << "\n";
    if (f.expected_genus) out << "meta genus " << *f.expected_genus << "\n";
    if (f.expected_cusps) out << "meta cusps " << *f.expected_cusps << "\n";
    const auto& tri = f.surface.tri;
    char buf[64];
    for (int e = 0; e < tri.edge_count(); ++e) {
        std::snprintf(buf, sizeof buf, "%.17g", f.surface.lengths[e]);
        out << "edge " << tri.edge_names[e] << " " << buf << "\n";
    }
    for (int i = 0; i < tri.face_count(); ++i) {
        const auto& face = tri.faces[i];
        if (face.cusp) {
            out << "face " << tri.face_names[i] << " cusp " << tri.edge_names[face.edges[0]] << "\n";
        } else {
            out << "face " << tri.face_names[i] << " compact";
            for (int s = 0; s < 3; ++s) out << " " << tri.edge_names[face.edges[s]];
            out << "\n";
        }
    }
    int c = 0;
    for (const auto& cyc : tri.cusp_cycles) {
        out << "cusp C" << c++;
        for (int fid : cyc) out << " " << tri.face_names[fid];
        out << "\n";
    }
    return out.str();
}

}  // namespace hsurf
