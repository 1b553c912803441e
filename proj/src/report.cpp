#include "knotcount/report.hpp"

#include <fstream>
#include <sstream>

#include "knotcount/error.hpp"

namespace knotcount {

Format parse_format(const std::string& name) {
    if (name == "json") return Format::Json;
    if (name == "csv") return Format::Csv;
    if (name == "text") return Format::Text;
    fail("UnsupportedFormat", "unknown format '" + name + "'");
}

json group_to_json(const GroupTable& G) {
    json j;
    j["order"] = G.order;
    j["labels"] = G.labels;
    json rows = json::array();
    for (int a = 0; a < G.order; ++a) {
        json row = json::array();
        for (int b = 0; b < G.order; ++b) row.push_back(G.op(a, b));
        rows.push_back(std::move(row));
    }
    j["mul"] = std::move(rows);
    return j;
}

GroupTable group_from_json(const json& j) {
    if (!j.is_object() || !j.contains("order") || !j.contains("mul"))
        fail("MalformedSpec", "group file needs 'order' and 'mul'");
    int order = 0;
    std::vector<std::string> labels;
    std::vector<int> mul;
    try {
        order = j.at("order").get<int>();
        if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
        for (const auto& row : j.at("mul"))
            for (const auto& v : row) mul.push_back(v.get<int>());
    } catch (const json::exception& e) {
        fail("MalformedSpec", std::string("bad group file: ") + e.what());
    }
    return group_from_table(order, std::move(labels), std::move(mul));
}

GroupTable load_group_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("ConfigError", "cannot open group file '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        fail("MalformedSpec", std::string("bad JSON in group file: ") + e.what());
    }
    return group_from_json(j);
}

json count_report_to_json(const CountReport& r) {
    json j;
    j["count"] = r.count;
    j["strands"] = r.strands;
    j["c"] = r.c;
    j["bound"] = r.bound;
    j["method"] = method_name(r.method);
    return j;
}

json profile_to_json(const TorusProfile& p) {
    json j;
    j["p_range"] = json::array({0, p.p_max});
    j["counts"] = p.counts;
    if (p.period) j["period"] = *p.period;
    else j["period"] = nullptr;
    j["bound"] = p.bound;
    j["verdict"] = verdict_name(p.verdict);
    return j;
}

json witnesses_to_json(const GroupTable& G, const std::vector<StarWitness>& ws) {
    json arr = json::array();
    for (const StarWitness& w : ws) {
        json e;
        e["a"] = G.labels[w.a];
        e["b"] = G.labels[w.b];
        e["p"] = w.p;
        arr.push_back(std::move(e));
    }
    return arr;
}

json verdict_to_json(const FiniteTypeVerdict& v) {
    json j;
    j["claim"] = v.claim;
    j["group"] = v.group_desc;
    j["subset"] = v.subset_desc;
    j["c"] = v.c;
    j["holds"] = v.holds;
    json ws = json::array();
    for (const NamedWitness& w : v.witnesses) {
        json e;
        e["a"] = w.a;
        e["b"] = w.b;
        e["p"] = w.p;
        ws.push_back(std::move(e));
    }
    j["witnesses"] = std::move(ws);
    j["profile"] = profile_to_json(v.profile);
    return j;
}

namespace {

std::string dump(const json& j) { return j.dump(2) + "\n"; }

} // namespace

std::string render_count(const CountReport& r, Format f) {
    switch (f) {
        case Format::Json: return dump(count_report_to_json(r));
        case Format::Csv: {
            std::ostringstream os;
            os << "count,strands,c,bound,method\n"
               << r.count << ',' << r.strands << ',' << r.c << ',' << r.bound << ','
               << method_name(r.method) << '\n';
            return os.str();
        }
        case Format::Text: {
            std::ostringstream os;
            os << "[K,G,C] = " << r.count << "  (method " << method_name(r.method) << ", "
               << r.strands << " strands, c = " << r.c << ", bound c^k = " << r.bound << ")\n";
            return os.str();
        }
    }
    fail("UnsupportedFormat", "bad format");
}

std::string render_profile(const TorusProfile& p, Format f) {
    switch (f) {
        case Format::Json: return dump(profile_to_json(p));
        case Format::Csv: {
            std::ostringstream os;
            os << "p,count\n";
            for (int i = 0; i <= p.p_max; ++i) os << i << ',' << p.counts[i] << '\n';
            return os.str();
        }
        case Format::Text: {
            std::ostringstream os;
            os << "torus profile p = 0.." << p.p_max << ": ";
            for (int i = 0; i <= p.p_max; ++i) os << (i ? " " : "") << p.counts[i];
            os << "\nperiod: ";
            if (p.period) os << *p.period;
            else os << "none";
            os << "  max: " << p.max_count << "  bound c^2: " << p.bound
               << "  verdict: " << verdict_name(p.verdict) << '\n';
            return os.str();
        }
    }
    fail("UnsupportedFormat", "bad format");
}

std::string render_witnesses(const GroupTable& G, const std::vector<StarWitness>& ws, Format f) {
    switch (f) {
        case Format::Json: return dump(witnesses_to_json(G, ws));
        case Format::Csv: {
            std::ostringstream os;
            os << "a,b,p\n";
            for (const StarWitness& w : ws)
                os << G.labels[w.a] << ',' << G.labels[w.b] << ',' << w.p << '\n';
            return os.str();
        }
        case Format::Text: {
            std::ostringstream os;
            if (ws.empty()) {
                os << "no (**) witnesses in range\n";
            } else {
                for (const StarWitness& w : ws)
                    os << "(a,b,p) = (" << G.labels[w.a] << ", " << G.labels[w.b] << ", " << w.p
                       << ")\n";
            }
            return os.str();
        }
    }
    fail("UnsupportedFormat", "bad format");
}

std::string render_verdict(const FiniteTypeVerdict& v, Format f) {
    switch (f) {
        case Format::Json: return dump(verdict_to_json(v));
        case Format::Csv:
            fail("UnsupportedFormat", "verdicts have no CSV form; use json or text");
        case Format::Text: {
            std::ostringstream os;
            os << v.claim << " on " << v.group_desc << " / " << v.subset_desc << " (c = " << v.c
               << "): " << (v.holds ? "holds" : "not confirmed") << '\n';
            if (!v.witnesses.empty()) {
                const NamedWitness& w = v.witnesses.front();
                os << "first witness: (" << w.a << ", " << w.b << ", p = " << w.p << ") of "
                   << v.witnesses.size() << '\n';
            }
            os << "profile verdict: " << verdict_name(v.profile.verdict) << '\n';
            return os.str();
        }
    }
    fail("UnsupportedFormat", "bad format");
}

} // namespace knotcount
