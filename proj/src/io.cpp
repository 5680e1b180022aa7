#include "balance/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace balance::io {

StrategyMatrix parse_strategy(std::string_view text) {
    std::vector<std::vector<Placement>> rows;
    int line_no = 0;
    std::size_t pos = 0;
    std::size_t width = 0;
    while (pos < text.size()) {
        const std::size_t end = text.find('\n', pos);
        std::string_view line = text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
        pos = end == std::string_view::npos ? text.size() : end + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.empty() || line.front() == '#') continue;

        std::vector<Placement> row;
        row.reserve(line.size());
        for (std::size_t c = 0; c < line.size(); ++c) {
            switch (line[c]) {
                case 'L': row.push_back(Placement::Left); break;
                case 'R': row.push_back(Placement::Right); break;
                case 'O': row.push_back(Placement::Off); break;
                default:
                    throw ParseError(std::string("invalid placement '") + line[c] + "', expected L, R or O", line_no,
                                     static_cast<int>(c) + 1);
            }
        }
        if (rows.empty()) {
            width = row.size();
        } else if (row.size() != width) {
            throw ParseError("row has " + std::to_string(row.size()) + " rounds, expected " + std::to_string(width),
                             line_no, static_cast<int>(std::min(row.size(), width)) + 1);
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ParseError("strategy file contains no rows");
    return StrategyMatrix(rows);
}

std::string format_strategy(const StrategyMatrix& strategy) {
    std::string out;
    out.reserve(static_cast<std::size_t>(strategy.rows()) * (static_cast<std::size_t>(strategy.cols()) + 1));
    for (int i = 0; i < strategy.rows(); ++i) {
        out += strategy.row_string(i);
        out += '\n';
    }
    return out;
}

StrategyMatrix read_strategy_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open strategy file '" + path.string() + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_strategy(buffer.str());
}

std::string format_number(double value) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 9);
    if (ec != std::errc{}) return "nan";
    return std::string(buf, ptr);
}

std::string format_csv(const std::vector<std::string>& header, const std::vector<std::vector<double>>& rows) {
    std::string out;
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (i) out += ',';
        out += header[i];
    }
    out += '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += format_number(row[i]);
        }
        out += '\n';
    }
    return out;
}

Json to_json(const GameSpec& spec) {
    return Json{{"n", spec.n}, {"q", spec.q}, {"k", spec.k}, {"prior", to_string(spec.prior)}};
}

Json to_json(const Hypothesis& h) {
    return Json{{"coin", h.coin + 1}, {"sign", h.sign == Sign::Heavy ? "heavy" : "light"}};
}

Json to_json(const std::vector<Hypothesis>& hs) {
    Json arr = Json::array();
    for (const auto& h : hs) arr.push_back(to_json(h));
    return arr;
}

Json to_json(const Verdict& v) {
    Json j;
    j["outcome"] = to_string(v.kind);
    j["survivors"] = to_json(v.survivors);
    return j;
}

Json to_json(const AttackResult& a) {
    Json j;
    j["mask"] = a.mask.to_string();
    j["method"] = to_string(a.method);
    j["survivors"] = to_json(a.survivors);
    return j;
}

Json to_json(const Certificate& c) {
    Json j;
    j["outcome"] = to_string(c.outcome);
    j["masks_checked"] = c.masks_checked;
    j["attack"] = c.attack ? to_json(*c.attack) : Json(nullptr);
    return j;
}

Json to_json(const GameValue& v) {
    Json j;
    j["winner"] = to_string(v.winner);
    j["mode"] = to_string(v.mode);
    j["instances_checked"] = v.instances_checked;
    j["witness"] = v.witness ? Json(v.witness->to_strings()) : Json(nullptr);
    return j;
}

Json to_json(const TrialReport& r) {
    Json j;
    j["spec"] = to_json(r.spec);
    j["r"] = r.r;
    j["trials"] = r.trials;
    j["successes"] = r.successes;
    j["estimate"] = r.estimate;
    j["half_width"] = r.half_width;
    j["seed"] = r.seed;
    j["formula_rate"] = r.formula_rate ? Json(*r.formula_rate) : Json(nullptr);
    j["exact_rate"] = r.exact_rate ? Json(*r.exact_rate) : Json(nullptr);
    return j;
}

Json to_json(const ConcentrationReport& r) {
    Json j;
    j["q"] = r.q;
    j["r"] = r.r;
    j["delta"] = r.delta;
    j["trials"] = r.trials;
    j["exceedances"] = r.exceedances;
    j["empirical_tail"] = r.empirical_tail;
    j["chernoff_bound"] = r.chernoff_bound;
    j["seed"] = r.seed;
    return j;
}

Json report(std::string_view command) {
    Json j;
    j["schema"] = kReportSchema;
    j["command"] = std::string(command);
    return j;
}

}  // namespace balance::io
