#include "acmforge/jobspec.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

namespace acmforge {
namespace {

struct Tok {
    std::string text;
    int col;  // 1-based start column
};

std::vector<Tok> tokens_of(const std::string& line) {
    std::vector<Tok> out;
    size_t i = 0;
    while (i < line.size()) {
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        out.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
        i = j;
    }
    return out;
}

[[noreturn]] void fail_at(int line, int col, const std::string& msg) {
    throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(col) + ": " +
                     msg);
}

// strip the class prefix from a rethrown ForgeError message
std::string drop_label(std::string msg) {
    for (const char* label : {"parse error: ", "precondition: "}) {
        if (msg.rfind(label, 0) == 0) return msg.substr(std::string(label).size());
    }
    return msg;
}

int end_col(const std::string& line) { return static_cast<int>(line.size()) + 1; }

int parse_int_tok(const Tok& t, int line) {
    int v = 0;
    const char* first = t.text.data();
    const char* last = first + t.text.size();
    auto [p, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || p != last)
        fail_at(line, t.col, "expected an integer, got '" + t.text + "'");
    return v;
}

Poly parse_fragment(const Ring& r, const std::string& frag, int line, int col) {
    try {
        return p_parse(r, frag);
    } catch (const ForgeError& e) {
        fail_at(line, col, drop_label(e.what()));
    } catch (const std::exception&) {
        fail_at(line, col, "malformed polynomial '" + frag + "'");
    }
}

struct Item {
    std::string text;
    int col;
};

// split line[from_col-1..] on commas, trimming each piece; empty pieces are errors
std::vector<Item> split_commas(const std::string& line, int from_col, int lineno) {
    std::vector<Item> out;
    size_t start = static_cast<size_t>(from_col) - 1;
    auto flush = [&](size_t lo, size_t hi) {
        while (lo < hi && std::isspace(static_cast<unsigned char>(line[lo]))) ++lo;
        while (hi > lo && std::isspace(static_cast<unsigned char>(line[hi - 1]))) --hi;
        if (lo == hi) fail_at(lineno, static_cast<int>(lo) + 1, "expected a polynomial");
        out.push_back({line.substr(lo, hi - lo), static_cast<int>(lo) + 1});
    };
    size_t piece = start;
    for (size_t i = start; i < line.size(); ++i) {
        if (line[i] == ',') {
            flush(piece, i);
            piece = i + 1;
        }
    }
    flush(piece, line.size());
    return out;
}

bool valid_var_name(const std::string& s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

}  // namespace

JobSpec parse_job(const std::string& text) {
    JobSpec job;
    bool field_seen = false;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back())))
            line.pop_back();
        auto toks = tokens_of(line);
        if (toks.empty()) continue;
        const std::string& kw = toks[0].text;

        if (kw == "field") {
            if (job.ring) fail_at(lineno, toks[0].col, "field must precede ring");
            if (field_seen) fail_at(lineno, toks[0].col, "duplicate field line");
            if (toks.size() != 2)
                fail_at(lineno, toks.size() < 2 ? end_col(line) : toks[2].col,
                        "expected exactly one of p=<prime> or q=rational");
            const std::string& s = toks[1].text;
            if (s == "q=rational") {
                job.rational = true;
            } else if (s.rfind("p=", 0) == 0) {
                std::uint64_t v = 0;
                const char* first = s.data() + 2;
                const char* last = s.data() + s.size();
                auto [p, ec] = std::from_chars(first, last, v);
                if (ec != std::errc() || p != last || first == last)
                    fail_at(lineno, toks[1].col, "expected p=<prime>, got '" + s + "'");
                try {
                    (void)Field::prime(v);
                } catch (const ForgeError& e) {
                    fail_at(lineno, toks[1].col, drop_label(e.what()));
                }
                job.prime = v;
            } else {
                fail_at(lineno, toks[1].col, "expected p=<prime> or q=rational");
            }
            field_seen = true;
        } else if (kw == "ring") {
            if (job.ring) fail_at(lineno, toks[0].col, "duplicate ring line");
            if (toks.size() < 2) fail_at(lineno, end_col(line), "expected variable names");
            std::vector<std::string> names;
            for (size_t i = 1; i < toks.size(); ++i) {
                if (!valid_var_name(toks[i].text))
                    fail_at(lineno, toks[i].col, "invalid variable name '" + toks[i].text + "'");
                for (const auto& seen : names)
                    if (seen == toks[i].text)
                        fail_at(lineno, toks[i].col,
                                "duplicate variable '" + toks[i].text + "'");
                names.push_back(toks[i].text);
            }
            Field k = job.rational ? Field::rationals() : Field::prime(job.prime);
            job.ring = make_ring(k, std::move(names));
        } else if (kw == "hypersurface") {
            if (!job.ring) fail_at(lineno, toks[0].col, "hypersurface before ring");
            if (!job.f.is_zero()) fail_at(lineno, toks[0].col, "duplicate hypersurface line");
            if (toks.size() < 2) fail_at(lineno, end_col(line), "expected a polynomial");
            int col = toks[1].col;
            Poly f = parse_fragment(job.ring, line.substr(col - 1), lineno, col);
            if (f.is_zero()) fail_at(lineno, col, "hypersurface must be nonzero");
            if (!f.is_homogeneous()) fail_at(lineno, col, "hypersurface must be homogeneous");
            if (f.degree() < 1) fail_at(lineno, col, "hypersurface must have positive degree");
            job.f = f;
        } else if (kw == "ideal") {
            if (!job.ring) fail_at(lineno, toks[0].col, "ideal before ring");
            if (job.has_ideal) fail_at(lineno, toks[0].col, "duplicate ideal line");
            if (toks.size() < 2) fail_at(lineno, end_col(line), "expected polynomials");
            for (const auto& it : split_commas(line, toks[1].col, lineno)) {
                Poly p = parse_fragment(job.ring, it.text, lineno, it.col);
                if (!p.is_homogeneous())
                    fail_at(lineno, it.col, "ideal generators must be homogeneous");
                job.ideal.push_back(std::move(p));
            }
            job.has_ideal = true;
        } else if (kw == "module") {
            if (!job.ring) fail_at(lineno, toks[0].col, "module before ring");
            if (toks.size() < 2) fail_at(lineno, end_col(line), "expected 'gens' or 'rel'");
            if (toks[1].text == "gens") {
                if (job.has_module) fail_at(lineno, toks[0].col, "duplicate module gens line");
                if (toks.size() < 3) fail_at(lineno, end_col(line), "expected generator degrees");
                for (size_t i = 2; i < toks.size(); ++i)
                    job.module_gens.push_back(parse_int_tok(toks[i], lineno));
                job.has_module = true;
            } else if (toks[1].text == "rel") {
                if (!job.has_module)
                    fail_at(lineno, toks[1].col, "module rel before module gens");
                if (toks.size() < 3) fail_at(lineno, end_col(line), "expected polynomials");
                auto items = split_commas(line, toks[2].col, lineno);
                if (items.size() != job.module_gens.size())
                    fail_at(lineno, toks[2].col,
                            "expected " + std::to_string(job.module_gens.size()) +
                                " entries, got " + std::to_string(items.size()));
                std::vector<Poly> comps;
                for (const auto& it : items)
                    comps.push_back(parse_fragment(job.ring, it.text, lineno, it.col));
                FreeModule fm{job.ring, job.module_gens};
                Vec v(fm, comps);
                if (v.is_zero()) fail_at(lineno, toks[2].col, "zero relation column");
                if (!v_is_homogeneous(v, fm))
                    fail_at(lineno, toks[2].col, "relation column is not homogeneous");
                job.module_rels.push_back(std::move(comps));
            } else {
                fail_at(lineno, toks[1].col, "expected 'gens' or 'rel' after module");
            }
        } else if (kw == "linear") {
            if (!job.ring) fail_at(lineno, toks[0].col, "linear before ring");
            if (job.has_linear) fail_at(lineno, toks[0].col, "duplicate linear line");
            if (toks.size() == 2 && toks[1].text == "empty") {
                job.linear_empty = true;
            } else {
                if (toks.size() < 2)
                    fail_at(lineno, end_col(line), "expected linear forms or 'empty'");
                for (const auto& it : split_commas(line, toks[1].col, lineno)) {
                    Poly p = parse_fragment(job.ring, it.text, lineno, it.col);
                    if (p.is_zero() || !p.is_homogeneous() || p.degree() != 1)
                        fail_at(lineno, it.col, "expected a linear form");
                    job.linear.push_back(std::move(p));
                }
            }
            job.has_linear = true;
        } else if (kw == "twists") {
            if (job.has_twists) fail_at(lineno, toks[0].col, "duplicate twists line");
            if (toks.size() < 2) fail_at(lineno, end_col(line), "expected twist values");
            for (size_t i = 1; i < toks.size(); ++i)
                job.twists.push_back(parse_int_tok(toks[i], lineno));
            job.has_twists = true;
        } else {
            fail_at(lineno, toks[0].col, "unknown directive '" + kw + "'");
        }
    }
    return job;
}

std::string print_job(const JobSpec& job) {
    std::ostringstream out;
    if (job.rational)
        out << "field q=rational\n";
    else
        out << "field p=" << job.prime << "\n";
    if (job.ring) {
        out << "ring";
        for (const auto& v : job.ring->vars) out << ' ' << v;
        out << '\n';
    }
    if (!job.f.is_zero()) out << "hypersurface " << p_str(job.f) << '\n';
    if (job.has_ideal) {
        out << "ideal ";
        for (size_t i = 0; i < job.ideal.size(); ++i)
            out << (i ? ", " : "") << p_str(job.ideal[i]);
        out << '\n';
    }
    if (job.has_module) {
        out << "module gens";
        for (int d : job.module_gens) out << ' ' << d;
        out << '\n';
        for (const auto& col : job.module_rels) {
            out << "module rel ";
            for (size_t i = 0; i < col.size(); ++i) out << (i ? ", " : "") << p_str(col[i]);
            out << '\n';
        }
    }
    if (job.has_linear) {
        if (job.linear_empty) {
            out << "linear empty\n";
        } else {
            out << "linear ";
            for (size_t i = 0; i < job.linear.size(); ++i)
                out << (i ? ", " : "") << p_str(job.linear[i]);
            out << '\n';
        }
    }
    if (job.has_twists) {
        out << "twists";
        for (int t : job.twists) out << ' ' << t;
        out << '\n';
    }
    return out.str();
}

PresentedModule job_module(const JobSpec& job) {
    require(job.ring != nullptr, "job has no ring line");
    require(job.has_module, "job has no module target");
    Over over = job.f.is_zero() ? Over::ambient : Over::quotient;
    FreeModule fm{job.ring, job.module_gens};
    std::vector<Vec> cols;
    std::vector<int> src_degs;
    for (const auto& comps : job.module_rels) {
        Vec v(fm, comps);
        auto d = v_degree(v, fm);
        require(d.has_value(), "zero relation column");
        src_degs.push_back(*d);
        cols.push_back(std::move(v));
    }
    GradedMatrix rel = make_matrix(fm, FreeModule{job.ring, std::move(src_degs)},
                                   std::move(cols));
    return make_presented(over, fm, rel, job.f);
}

}  // namespace acmforge
