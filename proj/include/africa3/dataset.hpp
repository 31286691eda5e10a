#pragma once

#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "africa3/geo.hpp"

namespace africa3 {

enum class SubRegion { Central, Eastern, Northern, Southern, Western };

const char* to_string(SubRegion r);
std::optional<SubRegion> sub_region_from_string(const std::string& s);

struct Country {
    std::string id;        // stable slug, unique within a dataset
    std::string name;
    SubRegion sub_region = SubRegion::Central;
    GeoPoint centroid;
    std::uint64_t population = 0;
    int dc_count = 0;
    int landings = 0;      // derived from the cable dataset, 0 until applied
};

class CountryDataset {
  public:
    CountryDataset() = default;
    explicit CountryDataset(std::vector<Country> countries);

    const std::vector<Country>& countries() const { return countries_; }
    std::size_t size() const { return countries_.size(); }
    bool empty() const { return countries_.empty(); }

    bool contains(const std::string& id) const { return index_.count(id) != 0; }
    const Country& at(const std::string& id) const;
    const Country& at(std::size_t i) const { return countries_.at(i); }
    std::size_t index_of(const std::string& id) const;

    void apply_landings(const std::map<std::string, int>& landings);

  private:
    std::vector<Country> countries_;
    std::map<std::string, std::size_t> index_;
};

struct CableRecord {
    std::string name;
    std::vector<std::string> countries_touched;
};

// countries.csv: id,name,sub_region,lat,lon,population,dc_count
CountryDataset load_countries(std::istream& in);
CountryDataset load_countries_file(const std::string& path);

// cables.csv: name,countries where countries is a ';'-separated id list
std::vector<CableRecord> load_cables(std::istream& in);
std::vector<CableRecord> load_cables_file(const std::string& path);

// Number of distinct cable records touching each country id.
std::map<std::string, int> landings_per_country(const std::vector<CableRecord>& cables);

// Ids present in cable records but not in the dataset (reported, not fatal).
std::vector<std::string> unresolved_cable_ids(const std::vector<CableRecord>& cables,
                                              const CountryDataset& ds);

void export_countries(const CountryDataset& ds, std::ostream& out);

}  // namespace africa3
