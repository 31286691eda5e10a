#include "africa3/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "africa3/errors.hpp"

namespace africa3 {

const char* to_string(SubRegion r) {
    switch (r) {
        case SubRegion::Central: return "Central";
        case SubRegion::Eastern: return "Eastern";
        case SubRegion::Northern: return "Northern";
        case SubRegion::Southern: return "Southern";
        case SubRegion::Western: return "Western";
    }
    return "?";
}

std::optional<SubRegion> sub_region_from_string(const std::string& s) {
    if (s == "Central") return SubRegion::Central;
    if (s == "Eastern") return SubRegion::Eastern;
    if (s == "Northern") return SubRegion::Northern;
    if (s == "Southern") return SubRegion::Southern;
    if (s == "Western") return SubRegion::Western;
    return std::nullopt;
}

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(line);
    while (std::getline(is, cur, sep)) out.push_back(trim(cur));
    if (!line.empty() && line.back() == sep) out.push_back("");
    return out;
}

double parse_double(const std::string& s, int row, const char* what) {
    try {
        std::size_t pos = 0;
        double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ValidationError("row " + std::to_string(row) + ": bad " + what + " '" + s + "'");
    }
}

std::uint64_t parse_u64(const std::string& s, int row, const char* what) {
    std::uint64_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size())
        throw ValidationError("row " + std::to_string(row) + ": bad " + what + " '" + s + "'");
    return v;
}

}  // namespace

CountryDataset::CountryDataset(std::vector<Country> countries) : countries_(std::move(countries)) {
    for (std::size_t i = 0; i < countries_.size(); ++i) {
        auto [it, inserted] = index_.emplace(countries_[i].id, i);
        if (!inserted) throw ValidationError("duplicate country id '" + countries_[i].id + "'");
    }
}

const Country& CountryDataset::at(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) throw ValidationError("unknown country id '" + id + "'");
    return countries_[it->second];
}

std::size_t CountryDataset::index_of(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) throw ValidationError("unknown country id '" + id + "'");
    return it->second;
}

void CountryDataset::apply_landings(const std::map<std::string, int>& landings) {
    for (auto& c : countries_) {
        auto it = landings.find(c.id);
        c.landings = it == landings.end() ? 0 : it->second;
    }
}

CountryDataset load_countries(std::istream& in) {
    std::string line;
    std::vector<Country> rows;
    int row = 0;
    bool header = true;
    while (std::getline(in, line)) {
        ++row;
        if (trim(line).empty()) continue;
        if (header) {
            header = false;
            continue;
        }
        auto f = split(line, ',');
        if (f.size() != 7)
            throw ValidationError("row " + std::to_string(row) + ": expected 7 fields, got " +
                                  std::to_string(f.size()));
        Country c;
        c.id = f[0];
        c.name = f[1];
        auto sr = sub_region_from_string(f[2]);
        if (!sr) throw ValidationError("row " + std::to_string(row) + ": bad sub_region '" + f[2] + "'");
        c.sub_region = *sr;
        c.centroid = GeoPoint{parse_double(f[3], row, "lat"), parse_double(f[4], row, "lon")};
        if (!c.centroid.valid())
            throw ValidationError("row " + std::to_string(row) + ": coordinate out of range");
        c.population = parse_u64(f[5], row, "population");
        c.dc_count = static_cast<int>(parse_u64(f[6], row, "dc_count"));
        rows.push_back(std::move(c));
    }
    return CountryDataset(std::move(rows));
}

CountryDataset load_countries_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    return load_countries(in);
}

std::vector<CableRecord> load_cables(std::istream& in) {
    std::string line;
    std::vector<CableRecord> out;
    int row = 0;
    bool header = true;
    while (std::getline(in, line)) {
        ++row;
        if (trim(line).empty()) continue;
        if (header) {
            header = false;
            continue;
        }
        auto comma = line.find(',');
        if (comma == std::string::npos)
            throw ValidationError("row " + std::to_string(row) + ": expected name,countries");
        CableRecord rec;
        rec.name = trim(line.substr(0, comma));
        if (rec.name.empty())
            throw ValidationError("row " + std::to_string(row) + ": empty cable name");
        for (auto& id : split(line.substr(comma + 1), ';'))
            if (!id.empty()) rec.countries_touched.push_back(id);
        out.push_back(std::move(rec));
    }
    return out;
}

std::vector<CableRecord> load_cables_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    return load_cables(in);
}

std::map<std::string, int> landings_per_country(const std::vector<CableRecord>& cables) {
    std::map<std::string, int> counts;
    for (const auto& rec : cables) {
        std::set<std::string> distinct(rec.countries_touched.begin(), rec.countries_touched.end());
        for (const auto& id : distinct) counts[id] += 1;
    }
    return counts;
}

std::vector<std::string> unresolved_cable_ids(const std::vector<CableRecord>& cables,
                                              const CountryDataset& ds) {
    std::set<std::string> unknown;
    for (const auto& rec : cables)
        for (const auto& id : rec.countries_touched)
            if (!ds.contains(id)) unknown.insert(id);
    return {unknown.begin(), unknown.end()};
}

namespace {

// Shortest round-trip decimal form, so export/load is lossless byte for byte.
std::string shortest(double v) {
    char buf[64];
    auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, p);
}

}  // namespace

void export_countries(const CountryDataset& ds, std::ostream& out) {
    out << "id,name,sub_region,lat,lon,population,dc_count\n";
    for (const auto& c : ds.countries()) {
        out << c.id << ',' << c.name << ',' << to_string(c.sub_region) << ','
            << shortest(c.centroid.lat) << ',' << shortest(c.centroid.lon) << ','
            << c.population << ',' << c.dc_count << '\n';
    }
}

}  // namespace africa3
