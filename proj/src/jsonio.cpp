#include "springergreen/jsonio.hpp"

#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>

namespace sg {

namespace {
constexpr int kChartableFormatVersion = 1;
}

std::string fnv1a_hex(const std::string& data) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

json poly_to_json(const IntPoly& p) {
    json coeffs = json::array();
    for (int k = 0; k <= p.degree(); ++k) coeffs.push_back(to_dec(p.coeff(k)));
    return json{{"coeffs", coeffs}};
}

IntPoly poly_from_json(const json& j) {
    if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array())
        throw ParseError("polynomial JSON must be {\"coeffs\": [...]}");
    std::vector<Int> coeffs;
    for (const json& c : j["coeffs"]) coeffs.emplace_back(c.get<std::string>());
    return IntPoly(std::move(coeffs));
}

json symfunc_to_json(const SymFunc& f) {
    json terms = json::array();
    for (const auto& [p, c] : f.terms)
        terms.push_back(json{{"partition", p.str()}, {"poly", poly_to_json(c)}});
    return json{{"degree", f.degree}, {"terms", terms}};
}

SymFunc symfunc_from_json(const json& j) {
    SymFunc f = SymFunc::zero(j.at("degree").get<int>());
    for (const json& t : j.at("terms"))
        f.add_term(Partition::parse(t.at("partition").get<std::string>()),
                   poly_from_json(t.at("poly")));
    return f;
}

namespace {

json chartable_payload(const WeylTable& t) {
    json classes = json::array();
    for (const ClassData& cd : t.classes) {
        classes.push_back(json{{"label", cd.label.str(t.family)},
                               {"size", to_dec(cd.class_size)},
                               {"centralizer", to_dec(cd.centralizer_order)}});
    }
    json irreps = json::array();
    for (const IrrLabel& ir : t.irreps) {
        json entry{{"alpha", ir.alpha.str()}, {"beta", ir.beta.str()}};
        if (ir.split != 0) entry["split"] = ir.split > 0 ? "+" : "-";
        irreps.push_back(entry);
    }
    json values = json::array();
    for (const auto& row : t.chi) {
        json r = json::array();
        for (const Int& v : row) r.push_back(to_dec(v));
        values.push_back(r);
    }
    return json{{"format_version", kChartableFormatVersion},
                {"family", to_string(t.family)},
                {"n", t.n},
                {"order", to_dec(t.order)},
                {"classes", classes},
                {"irreps", irreps},
                {"values", values}};
}

} // namespace

json chartable_to_json(const WeylTable& t) {
    json payload = chartable_payload(t);
    payload["checksum"] = fnv1a_hex(payload.dump());
    return payload;
}

std::optional<WeylTable> chartable_from_json(const json& j) {
    try {
        if (!j.is_object() || j.value("format_version", -1) != kChartableFormatVersion)
            return std::nullopt;
        json body = j;
        const std::string checksum = body.value("checksum", "");
        body.erase("checksum");
        if (fnv1a_hex(body.dump()) != checksum) return std::nullopt;

        WeylTable t;
        const std::string fam = j.at("family").get<std::string>();
        if (fam == "A")
            t.family = WeylFamily::A;
        else if (fam == "BC")
            t.family = WeylFamily::BC;
        else if (fam == "D")
            t.family = WeylFamily::D;
        else
            return std::nullopt;
        t.n = j.at("n").get<int>();
        t.order = Int(j.at("order").get<std::string>());
        for (const json& c : j.at("classes")) {
            ClassData cd;
            cd.label = ClassLabel::parse(c.at("label").get<std::string>(), t.family);
            cd.class_size = Int(c.at("size").get<std::string>());
            cd.centralizer_order = Int(c.at("centralizer").get<std::string>());
            t.classes.push_back(std::move(cd));
        }
        for (const json& i : j.at("irreps")) {
            IrrLabel ir;
            ir.alpha = Partition::parse(i.at("alpha").get<std::string>());
            ir.beta = Partition::parse(i.at("beta").get<std::string>());
            if (i.contains("split")) ir.split = i.at("split").get<std::string>() == "+" ? +1 : -1;
            t.irreps.push_back(std::move(ir));
        }
        for (const json& row : j.at("values")) {
            std::vector<Int> r;
            for (const json& v : row) r.emplace_back(v.get<std::string>());
            t.chi.push_back(std::move(r));
        }
        if (t.chi.size() != t.irreps.size()) return std::nullopt;
        for (const auto& row : t.chi)
            if (row.size() != t.classes.size()) return std::nullopt;
        for (int i = 0; i < static_cast<int>(t.classes.size()); ++i)
            t.class_index.emplace(t.classes[i].label, i);
        for (int i = 0; i < static_cast<int>(t.irreps.size()); ++i)
            t.irrep_index.emplace(t.irreps[i], i);
        return t;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

std::string chartable_to_csv(const WeylTable& t) {
    auto quote = [](const std::string& s) { return "\"" + s + "\""; };
    std::string out = "label";
    for (const ClassData& cd : t.classes) out += "," + quote(cd.label.str(t.family));
    out += "\nsize";
    for (const ClassData& cd : t.classes) out += "," + to_dec(cd.class_size);
    out += "\ncentralizer";
    for (const ClassData& cd : t.classes) out += "," + to_dec(cd.centralizer_order);
    out += "\n";
    for (size_t i = 0; i < t.irreps.size(); ++i) {
        out += quote(t.irreps[i].str(t.family));
        for (const Int& v : t.chi[i]) out += "," + to_dec(v);
        out += "\n";
    }
    return out;
}

json report_to_json(const Report& r) {
    json cases = json::array();
    for (const CaseResult& c : r.cases) {
        json entry{{"lambda", c.lambda}, {"param", c.param}, {"pass", c.pass}};
        if (!c.pass) {
            entry["witness"] = c.witness;
            entry["lhs"] = c.lhs;
            entry["rhs"] = c.rhs;
        }
        cases.push_back(entry);
    }
    return json{{"suite", r.suite}, {"type", r.type},       {"n", r.n},
                {"cases", cases},   {"seconds", r.seconds}, {"pass", r.all_pass()}};
}

const WeylTable& cached_weyl_table(WeylFamily f, int n, const std::string& cache_dir) {
    if (cache_dir.empty()) return weyl_table(f, n);

    static std::mutex mutex;
    static std::map<std::string, std::unique_ptr<WeylTable>> loaded;
    const std::string key = to_string(f) + std::to_string(n) + "@" + cache_dir;
    {
        std::lock_guard lock(mutex);
        auto it = loaded.find(key);
        if (it != loaded.end()) return *it->second;
    }

    namespace fs = std::filesystem;
    const fs::path path = fs::path(cache_dir) / (to_string(f) + std::to_string(n) + ".json");
    std::error_code ec;
    fs::create_directories(cache_dir, ec);
    if (fs::exists(path)) {
        std::ifstream in(path);
        json j;
        try {
            in >> j;
        } catch (const std::exception&) {
            j = json();
        }
        if (auto table = chartable_from_json(j)) {
            auto ptr = std::make_unique<WeylTable>(std::move(*table));
            std::lock_guard lock(mutex);
            auto [it, fresh] = loaded.emplace(key, std::move(ptr));
            return *it->second;
        }
        // stale, corrupted or version-mismatched: fall through and recompute
    }
    const WeylTable& t = weyl_table(f, n);
    std::ofstream out(path);
    if (!out) throw IoError("cannot write cache file " + path.string());
    out << chartable_to_json(t).dump(1) << "\n";
    return t;
}

} // namespace sg
