#include "cartanlab/report_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include <json.hpp>

namespace cartanlab {

namespace {

using json = nlohmann::ordered_json;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

json row_json(const ReportRow& r) {
    return json{{"word", r.word},   {"length", r.length}, {"mu", r.mu_text},
                {"norm", r.norm},   {"margin", r.margin}, {"label", r.label.str()}};
}

std::string svg_header(double w, double h) {
    return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(w) + "\" height=\"" + fmt(h) +
           "\" viewBox=\"0 0 " + fmt(w) + " " + fmt(h) + "\">\n";
}

} // namespace

std::string csv_quote(const std::string& field) {
    if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string rows_csv(const std::vector<ReportRow>& rows) {
    std::string out = "word,length,mu,norm,margin,label\n";
    for (const auto& r : rows) {
        out += csv_quote(r.word) + "," + std::to_string(r.length) + "," + csv_quote(r.mu_text) + "," + fmt(r.norm) +
               "," + fmt(r.margin) + "," + r.label.str() + "\n";
    }
    return out;
}

std::string margin_report_csv(const MarginReport& rep) { return rows_csv(rep.rows); }

std::string ball_csv(const std::vector<ReportRow>& rows) { return rows_csv(rows); }

std::string margin_report_summary_json(const MarginReport& rep) {
    json j;
    j["scenario"] = rep.scenario;
    j["field"] = rep.field;
    j["ball_radius"] = rep.ball_radius;
    j["ball_size"] = rep.ball_size;
    json census = json::object();
    for (const auto& [label, count] : rep.census) census[label] = count;
    j["census"] = std::move(census);
    json table = json::array();
    for (const auto& st : rep.table) {
        json t{{"threshold", st.threshold}, {"nonempty", st.any}};
        if (st.any) {
            t["min_margin"] = st.min_margin;
            t["witness"] = st.witness_word;
        }
        table.push_back(std::move(t));
    }
    j["thresholds"] = std::move(table);
    j["verdict"] = rep.verdict;
    json viol = json::array();
    for (const auto& r : rep.violations) viol.push_back(row_json(r));
    j["violations"] = std::move(viol);
    json comp;
    comp["found"] = rep.component_found;
    if (rep.component_found) {
        comp["component"] = rep.component;
        comp["iota_component"] = rep.component_iota;
    }
    comp["pass"] = rep.component_pass;
    comp["exception_norm_budget"] = rep.component_norm_budget;
    json exc = json::array();
    for (const auto& r : rep.component_exceptions) exc.push_back(row_json(r));
    comp["exceptions"] = std::move(exc);
    j["component_check"] = std::move(comp);
    j["orientation"] = rep.orientation_note;
    j["scale_note"] = rep.scale_note;
    if (!rep.discrepancy_note.empty()) j["discrepancy"] = rep.discrepancy_note;
    return j.dump(2) + "\n";
}

std::string margin_report_svg(const MarginReport& rep) {
    const double w = 640, h = 640, pad = 60;
    std::string body;
    const bool pair = rep.scenario == "double-rank-one";

    if (pair) {
        double maxv = 1.0;
        for (const auto& r : rep.rows) {
            if (r.factor_scalars.size() == 2) {
                maxv = std::max({maxv, r.factor_scalars[0], r.factor_scalars[1]});
            }
        }
        auto px = [&](double v) { return pad + (w - 2 * pad) * v / maxv; };
        auto py = [&](double v) { return h - pad - (h - 2 * pad) * v / maxv; };
        body += "<line x1=\"" + fmt(px(0)) + "\" y1=\"" + fmt(py(0)) + "\" x2=\"" + fmt(px(maxv)) + "\" y2=\"" +
                fmt(py(maxv)) + "\" stroke=\"#888\" stroke-dasharray=\"4 3\"/>\n";
        body += "<line x1=\"" + fmt(px(0)) + "\" y1=\"" + fmt(py(0)) + "\" x2=\"" + fmt(px(maxv)) + "\" y2=\"" +
                fmt(py(0)) + "\" stroke=\"#000\"/>\n";
        body += "<line x1=\"" + fmt(px(0)) + "\" y1=\"" + fmt(py(0)) + "\" x2=\"" + fmt(px(0)) + "\" y2=\"" +
                fmt(py(maxv)) + "\" stroke=\"#000\"/>\n";
        for (const auto& r : rep.rows) {
            if (r.factor_scalars.size() != 2) continue;
            const char* color = r.label.is_wall() ? "#d62728" : (r.label.kind == ComponentLabel::Kind::CPlus ? "#1f77b4" : "#2ca02c");
            body += "<circle cx=\"" + fmt(px(r.factor_scalars[0])) + "\" cy=\"" + fmt(py(r.factor_scalars[1])) +
                    "\" r=\"3\" fill=\"" + color + "\"/>\n";
        }
        body += "<text x=\"" + fmt(w / 2) + "\" y=\"" + fmt(h - 15) +
                "\" text-anchor=\"middle\" font-size=\"12\">left scalar (x1 - x2)</text>\n";
        body += "<text x=\"15\" y=\"" + fmt(h / 2) + "\" transform=\"rotate(-90 15 " + fmt(h / 2) +
                ")\" text-anchor=\"middle\" font-size=\"12\">right scalar (x1 - x2)</text>\n";
    } else {
        // project the sum-zero hyperplane of R^3 orthonormally; other n plot
        // (x1, -xn)
        double maxv = 1.0;
        std::vector<std::pair<double, double>> pts;
        std::vector<bool> wall;
        for (const auto& r : rep.rows) {
            if (r.mu_coords.empty()) continue;
            const auto& x = r.mu_coords[0];
            double u, v;
            if (x.size() == 3) {
                u = (x[0] - x[1]) / std::sqrt(2.0);
                v = (x[0] + x[1] - 2 * x[2]) / std::sqrt(6.0);
            } else {
                u = x.front();
                v = -x.back();
            }
            pts.emplace_back(u, v);
            wall.push_back(r.label.is_wall());
            maxv = std::max({maxv, std::fabs(u), std::fabs(v)});
        }
        auto px = [&](double val) { return pad + (w - 2 * pad) * (val + 0.1 * maxv) / (1.3 * maxv); };
        auto py = [&](double val) { return h - pad - (h - 2 * pad) * (val + 0.1 * maxv) / (1.3 * maxv); };
        const bool three = !rep.rows.empty() && !rep.rows.front().mu_coords.empty() &&
                           rep.rows.front().mu_coords[0].size() == 3;
        if (three) {
            // cone edges x1 = x2 (90 deg) and x2 = x3 (30 deg); wall x2 = 0 at 60 deg
            const double r = 1.15 * maxv;
            auto ray = [&](double deg, const char* style) {
                const double a = deg * std::acos(-1.0) / 180.0;
                return "<line x1=\"" + fmt(px(0)) + "\" y1=\"" + fmt(py(0)) + "\" x2=\"" + fmt(px(r * std::cos(a))) +
                       "\" y2=\"" + fmt(py(r * std::sin(a))) + "\" " + style + "/>\n";
            };
            body += ray(90.0, "stroke=\"#000\"");
            body += ray(30.0, "stroke=\"#000\"");
            body += ray(60.0, "stroke=\"#d62728\" stroke-dasharray=\"4 3\"");
        }
        for (std::size_t i = 0; i < pts.size(); ++i) {
            body += "<circle cx=\"" + fmt(px(pts[i].first)) + "\" cy=\"" + fmt(py(pts[i].second)) +
                    "\" r=\"3\" fill=\"" + (wall[i] ? "#d62728" : "#1f77b4") + "\"/>\n";
        }
        body += "<text x=\"" + fmt(w / 2) + "\" y=\"" + fmt(h - 15) +
                "\" text-anchor=\"middle\" font-size=\"12\">mu-images, chamber projection</text>\n";
    }
    return svg_header(w, h) + body + "</svg>\n";
}

std::string graph_check_csv(const GraphCheckResult& res) {
    std::string out = "R,violations,max_violation_length,confined\n";
    for (const auto& st : res.per_r) {
        out += fmt(st.r) + "," + std::to_string(st.violation_count) + "," +
               std::to_string(st.max_violation_length) + "," + (st.confined ? "true" : "false") + "\n";
    }
    return out;
}

std::string graph_check_summary_json(const GraphCheckResult& res, const SingleComponentResult* t12) {
    json j;
    j["ball_radius"] = res.ball_radius;
    j["ball_size"] = res.ball_size;
    json rows = json::array();
    for (const auto& st : res.per_r) {
        json r{{"R", st.r},
               {"violations", st.violation_count},
               {"max_violation_length", st.max_violation_length},
               {"confined", st.confined}};
        json ex = json::array();
        for (const auto& g : st.examples) {
            ex.push_back(json{{"word", g.word},
                              {"length", g.length},
                              {"scalar_gamma", g.scalar_gamma},
                              {"scalar_phi", g.scalar_phi}});
        }
        r["examples"] = std::move(ex);
        rows.push_back(std::move(r));
    }
    j["per_R"] = std::move(rows);
    j["admissible_at_scale"] = res.admissible_at_scale;
    if (t12 != nullptr) {
        json t;
        t["has_component"] = t12->has_component;
        if (t12->has_component) {
            t["component"] = t12->component.str();
            t["iota_component"] = t12->iota_image.str();
            t["iota_symmetric"] = t12->iota_symmetric;
        }
        t["exception_count"] = t12->exceptions.size();
        t["exception_norm_budget"] = t12->exception_norm_budget;
        t["pass"] = t12->pass;
        json ex = json::array();
        for (const auto& r : t12->exceptions) ex.push_back(row_json(r));
        t["exceptions"] = std::move(ex);
        j["component_check"] = std::move(t);
    }
    return j.dump(2) + "\n";
}

std::string torsion_demo_summary_json(const TorsionDemoResult& demo) {
    json j;
    json checks = json::array();
    for (const auto& c : demo.mu_checks) {
        checks.push_back(json{{"n", c.n}, {"r", c.r}, {"scalar", c.scalar}, {"ok", c.ok}});
    }
    j["mu_power_checks"] = std::move(checks);
    j["orders_all_p"] = demo.orders_all_p;
    j["order_offenders"] = demo.order_offenders;
    j["ball_size"] = demo.ball_size;
    json hits = json::array();
    for (const auto& r : demo.diagonal_hits) hits.push_back(row_json(r));
    j["diagonal_intersections"] = std::move(hits);
    j["discrepancy_flag"] = demo.discrepancy;
    if (demo.discrepancy) j["discrepancy_note"] = demo.discrepancy_note;
    j["verdict"] = demo.report.verdict;
    return j.dump(2) + "\n";
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    out << content;
}

} // namespace cartanlab
