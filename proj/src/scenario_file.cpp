// SPDX-License-Identifier: Apache-2.0

#include "rislink/scenario_file.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <vector>

namespace rislink {

namespace {

struct Entry {
    int line;
    std::string value;
};

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

const std::set<std::string> kKnownKeys = {
    "use_case",
    "carrier_ghz",
    "bandwidth_mhz",
    "tx_power_dbm",
    "tx_gain_dbi",
    "rx_gain_dbi",
    "noise_psd_dbm_hz",
    "n_elements",
    "element_gain_dbi",
    "tx_xyz",
    "rx_xyz",
    "ris_xyz",
    "los_mode_static",
    "los_mode_tx_ris",
    "los_mode_ris_rx",
    "k_factor_db",
    "shadow_sigma_los_db",
    "shadow_sigma_nlos_db",
    "user_region",
    "region_center_xy",
    "region_radius_m",
    "user_height_m",
    "cell_radius_m",
    "min_user_tx_distance_m",
    "qos_r_bps_hz",
    "trials",
    "seed",
    "modes",
};

class Parser {
  public:
    Parser(std::string_view text, std::string name) : name_(std::move(name)) {
        int line_no = 0;
        std::string line;
        std::istringstream in{std::string(text)};
        while (std::getline(in, line)) {
            ++line_no;
            if (const auto hash = line.find('#'); hash != std::string::npos)
                line.erase(hash);
            const std::string trimmed = trim(line);
            if (trimmed.empty()) continue;
            const auto eq = trimmed.find('=');
            if (eq == std::string::npos)
                fail(line_no, "", "expected 'key = value'");
            const std::string key = lower(trim(trimmed.substr(0, eq)));
            const std::string value = trim(trimmed.substr(eq + 1));
            if (key.empty()) fail(line_no, "", "missing key before '='");
            if (!kKnownKeys.count(key)) fail(line_no, key, "unknown key");
            if (entries_.count(key)) fail(line_no, key, "duplicate key");
            if (value.empty()) fail(line_no, key, "missing value");
            entries_[key] = Entry{line_no, value};
        }
    }

    ScenarioConfig resolve() {
        ScenarioConfig cfg;
        if (const Entry* e = find("use_case")) {
            try {
                cfg = build_use_case(parse_use_case(lower(e->value)));
            } catch (const std::exception& ex) {
                fail(e->line, "use_case", ex.what());
            }
        }

        number("carrier_ghz", cfg.carrier_ghz);
        if (cfg.ris) cfg.ris->fc_ghz = cfg.carrier_ghz;
        if (const Entry* e = find("bandwidth_mhz")) {
            double mhz = 0;
            parse_double(*e, "bandwidth_mhz", mhz);
            cfg.radio.bandwidth_hz = mhz * 1e6;
        }
        number("tx_power_dbm", cfg.radio.p_tx_dbm);
        number("tx_gain_dbi", cfg.radio.g_t_dbi);
        number("rx_gain_dbi", cfg.radio.g_r_dbi);
        number("noise_psd_dbm_hz", cfg.radio.noise_psd_dbm_hz);
        number("k_factor_db", cfg.channel.k_factor_db);
        number("shadow_sigma_los_db", cfg.channel.shadow_sigma_los_db);
        number("shadow_sigma_nlos_db", cfg.channel.shadow_sigma_nlos_db);
        number("cell_radius_m", cfg.cell_radius_m);
        number("min_user_tx_distance_m", cfg.min_user_tx_distance_m);

        if (const Entry* e = find("tx_xyz")) cfg.tx = parse_xyz(*e, "tx_xyz");
        if (const Entry* e = find("rx_xyz")) {
            cfg.rx_fixed = parse_xyz(*e, "rx_xyz");
            cfg.rx_region.reset();
        }
        if (const Entry* e = find("ris_xyz")) {
            if (!cfg.ris) {
                cfg.ris = RisPanel{};
                cfg.ris->fc_ghz = cfg.carrier_ghz;
            }
            cfg.ris->center = parse_xyz(*e, "ris_xyz");
        }
        if (const Entry* e = find("n_elements")) {
            long n = 0;
            parse_long(*e, "n_elements", n);
            if (!cfg.ris) fail(e->line, "n_elements", "no RIS in this scenario (set ris_xyz first)");
            cfg.ris->n_elements = static_cast<int>(n);
        }
        if (const Entry* e = find("element_gain_dbi")) {
            if (!cfg.ris) fail(e->line, "element_gain_dbi", "no RIS in this scenario (set ris_xyz first)");
            parse_double(*e, "element_gain_dbi", cfg.ris->element_gain_dbi);
        }

        los_mode("los_mode_static", cfg.los_static);
        los_mode("los_mode_tx_ris", cfg.los_tx_ris);
        los_mode("los_mode_ris_rx", cfg.los_ris_rx);

        if (const Entry* e = find("user_region")) {
            const std::string v = lower(e->value);
            if (v == "none") {
                cfg.rx_region.reset();
            } else {
                UserRegion region = cfg.rx_region.value_or(UserRegion{});
                if (v == "cell-disc")
                    region.kind = UserRegion::Kind::CellDisc;
                else if (v == "roi-disc")
                    region.kind = UserRegion::Kind::RoiDisc;
                else
                    fail(e->line, "user_region", "expected cell-disc, roi-disc or none");
                cfg.rx_region = region;
                cfg.rx_fixed.reset();
            }
        }
        if (const Entry* e = find("region_center_xy")) {
            if (!cfg.rx_region) fail(e->line, "region_center_xy", "no user region in this scenario");
            const auto xy = parse_numbers(*e, "region_center_xy", 2);
            cfg.rx_region->center = {xy[0], xy[1], 0.0};
        }
        if (const Entry* e = find("region_radius_m")) {
            if (!cfg.rx_region) fail(e->line, "region_radius_m", "no user region in this scenario");
            parse_double(*e, "region_radius_m", cfg.rx_region->radius_m);
        }
        if (const Entry* e = find("user_height_m")) {
            if (!cfg.rx_region) fail(e->line, "user_height_m", "no user region in this scenario");
            parse_double(*e, "user_height_m", cfg.rx_region->user_height_m);
        }

        if (const Entry* e = find("qos_r_bps_hz")) {
            double r = 0;
            parse_double(*e, "qos_r_bps_hz", r);
            cfg.qos_r_bps_hz = r;
        }
        if (const Entry* e = find("trials")) {
            long t = 0;
            parse_long(*e, "trials", t);
            if (t < 0) fail(e->line, "trials", "must be >= 0");
            cfg.trials = static_cast<std::size_t>(t);
        }
        if (const Entry* e = find("seed")) {
            unsigned long long s = 0;
            const auto& v = e->value;
            const auto res = std::from_chars(v.data(), v.data() + v.size(), s);
            if (res.ec != std::errc{} || res.ptr != v.data() + v.size())
                fail(e->line, "seed", "expected an unsigned integer, got '" + v + "'");
            cfg.seed = s;
        }
        if (const Entry* e = find("modes")) {
            cfg.modes.clear();
            std::stringstream ss(e->value);
            std::string token;
            while (std::getline(ss, token, ',')) {
                try {
                    cfg.modes.push_back(parse_mode(lower(trim(token))));
                } catch (const std::exception& ex) {
                    fail(e->line, "modes", ex.what());
                }
            }
            if (cfg.modes.empty()) fail(e->line, "modes", "expected at least one mode");
        }

        try {
            cfg.validate();
        } catch (const std::exception& ex) {
            throw ScenarioFileError(name_ + ": invalid scenario: " + ex.what());
        }
        return cfg;
    }

  private:
    [[noreturn]] void fail(int line, const std::string& key, const std::string& msg) const {
        std::string where = name_ + ":" + std::to_string(line);
        if (!key.empty()) where += ": " + key;
        throw ScenarioFileError(where + ": " + msg);
    }

    const Entry* find(const std::string& key) const {
        const auto it = entries_.find(key);
        return it == entries_.end() ? nullptr : &it->second;
    }

    void parse_double(const Entry& e, const std::string& key, double& out) const {
        try {
            std::size_t pos = 0;
            const double v = std::stod(e.value, &pos);
            if (pos != e.value.size()) throw std::invalid_argument("trailing characters");
            out = v;
        } catch (const std::exception&) {
            fail(e.line, key, "expected a number, got '" + e.value + "'");
        }
    }

    void parse_long(const Entry& e, const std::string& key, long& out) const {
        try {
            std::size_t pos = 0;
            const long v = std::stol(e.value, &pos);
            if (pos != e.value.size()) throw std::invalid_argument("trailing characters");
            out = v;
        } catch (const std::exception&) {
            fail(e.line, key, "expected an integer, got '" + e.value + "'");
        }
    }

    void number(const std::string& key, double& out) const {
        if (const Entry* e = find(key)) parse_double(*e, key, out);
    }

    std::vector<double> parse_numbers(const Entry& e, const std::string& key,
                                      std::size_t expected) const {
        std::string buf = e.value;
        std::replace(buf.begin(), buf.end(), ',', ' ');
        std::istringstream ss(buf);
        std::vector<double> values;
        double v;
        while (ss >> v) values.push_back(v);
        if (!ss.eof() || values.size() != expected)
            fail(e.line, key,
                 "expected " + std::to_string(expected) + " numbers, got '" + e.value + "'");
        return values;
    }

    Node3D parse_xyz(const Entry& e, const std::string& key) const {
        const auto v = parse_numbers(e, key, 3);
        return {v[0], v[1], v[2]};
    }

    void los_mode(const std::string& key, LosMode& out) const {
        const Entry* e = find(key);
        if (!e) return;
        const std::string v = lower(e->value);
        if (v == "forced-los")
            out = LosMode::ForcedLos;
        else if (v == "forced-nlos")
            out = LosMode::ForcedNlos;
        else if (v == "probabilistic")
            out = LosMode::Probabilistic;
        else
            fail(e->line, key, "expected forced-los, forced-nlos or probabilistic");
    }

    std::string name_;
    std::map<std::string, Entry> entries_;
};

}  // namespace

ScenarioConfig parse_scenario_text(std::string_view text, const std::string& name) {
    return Parser(text, name).resolve();
}

ScenarioConfig parse_scenario_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ScenarioFileError("cannot open scenario file: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario_text(buf.str(), path.filename().string());
}

}  // namespace rislink
