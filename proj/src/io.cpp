#include "beg/io.hpp"

#include "beg/errors.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace beg {

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

Json region_to_json(const Region& R) {
    Json a = Json::array();
    for (Coord c : R) a.push_back({c.x, c.y});
    return a;
}

Region region_from_json(const Json& j) {
    if (!j.is_array()) throw ValidationError("region must be a JSON array of [x, y] pairs");
    std::vector<Coord> cells;
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
            throw ValidationError("region entries must be integer pairs [x, y]");
        cells.push_back({e[0].get<int>(), e[1].get<int>()});
    }
    return Region(std::move(cells));
}

namespace {

char letter(int s) { return s < 0 ? 'M' : s == 0 ? 'Z' : 'P'; }

}  // namespace

std::string encode_row(const SpinGrid& u, int y) {
    const RectSpec& w = u.window();
    std::string out;
    int x = w.xmin;
    while (x <= w.xmax) {
        const int s = u.at({x, y});
        int n = 0;
        while (x <= w.xmax && u.at({x, y}) == s) {
            ++n;
            ++x;
        }
        out += std::to_string(n);
        out += letter(s);
    }
    return out;
}

Json grid_to_json(const SpinGrid& u) {
    const RectSpec& w = u.window();
    Json rows = Json::array();
    for (int y = w.ymin; y <= w.ymax; ++y) rows.push_back(encode_row(u, y));
    Json j;
    j["window"] = {w.xmin, w.xmax, w.ymin, w.ymax};
    j["epsilon"] = u.epsilon();
    j["rows"] = rows;
    return j;
}

SpinGrid grid_from_json(const Json& j) {
    try {
        const auto& win = j.at("window");
        if (!win.is_array() || win.size() != 4) throw ValidationError("grid window must be [xmin, xmax, ymin, ymax]");
        const RectSpec w{win[0].get<int>(), win[1].get<int>(), win[2].get<int>(), win[3].get<int>()};
        if (w.empty()) throw ValidationError("grid window is empty");
        const double eps = j.at("epsilon").get<double>();
        if (!(eps > 0)) throw ValidationError("grid epsilon must be positive");
        const auto& rows = j.at("rows");
        if (!rows.is_array() || int(rows.size()) != w.height())
            throw ValidationError("grid needs one encoded row per window row");
        SpinGrid u(w, eps, -1);
        for (int r = 0; r < w.height(); ++r) {
            const std::string row = rows[std::size_t(r)].get<std::string>();
            int x = w.xmin;
            std::size_t i = 0;
            while (i < row.size()) {
                std::size_t k = i;
                while (k < row.size() && std::isdigit(static_cast<unsigned char>(row[k]))) ++k;
                if (k == i || k >= row.size()) throw ValidationError("malformed run in grid row " + std::to_string(r));
                const int n = std::stoi(row.substr(i, k - i));
                const char c = row[k];
                const int s = c == 'M' ? -1 : c == 'Z' ? 0 : c == 'P' ? 1 : 2;
                if (s == 2) throw ValidationError(std::string("unknown spin letter '") + c + "'");
                for (int t = 0; t < n; ++t, ++x) {
                    if (x > w.xmax) throw ValidationError("grid row " + std::to_string(r) + " overruns the window");
                    u.set({x, w.ymin + r}, s);
                }
                i = k + 1;
            }
            if (x != w.xmax + 1) throw ValidationError("grid row " + std::to_string(r) + " does not fill the window");
        }
        return u;
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("malformed grid: ") + e.what());
    }
}

Json params_to_json(const ModelParams& p) {
    Json j;
    j["k"] = p.k;
    j["gamma"] = p.gamma;
    j["zeta"] = p.zeta;
    j["epsilon"] = p.epsilon;
    j["tau"] = p.tau();
    return j;
}

namespace {

template <class T>
Json array4(const std::array<T, 4>& a) {
    return Json::array({a[0], a[1], a[2], a[3]});
}

}  // namespace

void write_trace_jsonl(std::ostream& os, const FlowTrace& trace, const Json& header) {
    for (const FlowStep& s : trace.steps) {
        Json line;
        line["j"] = s.j;
        line["t"] = s.t;
        if (s.j == 0) {
            Json h = header;
            h["params"] = params_to_json(trace.params);
            h["surfactant_count"] = trace.surfactant_count;
            h["steps"] = trace.last_step();
            h["stop_reason"] = to_string(trace.stop);
            h["stop_detail"] = trace.stop_detail;
            line["header"] = h;
        }
        line["grid"] = grid_to_json(s.u);
        line["energy"] = s.value.energy;
        line["d1"] = s.value.d1;
        line["d0"] = s.value.d0;
        line["total"] = s.value.total;
        line["nZ"] = s.n_zero;
        line["shape"] = s.shape;
        line["P"] = array4(s.P);
        line["D"] = array4(s.D);
        line["side_cells"] = array4(s.side_cells);
        line["diag_steps"] = array4(s.diag_steps);
        line["alpha"] = array4(s.disp.alpha);
        line["beta"] = array4(s.disp.beta);
        if (s.stage != 0) line["stage"] = s.stage;
        if (s.j > 0) {
            Json band = Json::array();
            for (const auto& [lo, hi] : s.alpha_band) band.push_back({lo, hi});
            line["alpha_band"] = band;
        }
        if (s.outside_theory) line["outside_theory"] = true;
        os << line.dump() << '\n';
    }
}

void write_side_csv(std::ostream& os, const std::vector<SideRow>& rows) {
    os << "t,P1,P2,P3,P4,D1,D2,D3,D4,nZ,energy\n";
    for (const SideRow& r : rows) {
        os << format_double(r.t);
        for (double v : r.P) os << ',' << (r.classifiable ? format_double(v) : "");
        for (double v : r.D) os << ',' << (r.classifiable ? format_double(v) : "");
        os << ',' << r.n_zero << ',' << format_double(r.energy) << '\n';
    }
}

void write_continuum_csv(std::ostream& os, const ContinuumTrace& trace) {
    os << "t,P1,P2,P3,P4,D1,D2,D3,D4,event\n";
    for (const ContinuumSample& s : trace.samples) {
        os << format_double(s.t);
        for (double v : s.A.parallel_lengths()) os << ',' << format_double(v);
        for (double v : s.A.diagonal_lengths()) os << ',' << format_double(v);
        os << ',' << s.events << '\n';
    }
}

void write_audit_csv(std::ostream& os, const std::vector<AuditEntry>& audit) {
    os << "j,empty,alpha1,alpha2,alpha3,alpha4,beta1,beta2,beta3,beta4,energy,d1,d0,total\n";
    for (const AuditEntry& e : audit) {
        const CandidateRecord& r = e.record;
        os << e.j << ',' << (r.empty ? 1 : 0);
        for (int a : r.disp.alpha) os << ',' << a;
        for (int b : r.disp.beta) os << ',' << b;
        os << ',' << format_double(r.energy) << ',' << format_double(r.d1) << ',' << r.d0 << ','
           << format_double(r.total) << '\n';
    }
}

void write_compare_csv(std::ostream& os, const std::vector<CompareRow>& rows) {
    os << "epsilon,sup_hausdorff,samples,expected\n";
    for (const CompareRow& r : rows)
        os << format_double(r.epsilon) << ',' << format_double(r.sup_hausdorff) << ',' << r.samples << ','
           << r.expected << '\n';
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
    if (!out) throw std::runtime_error("write failed for " + path);
}

}  // namespace beg
