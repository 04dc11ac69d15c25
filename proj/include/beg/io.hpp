#pragma once

#include "beg/continuum.hpp"
#include "beg/flow.hpp"
#include "beg/lattice.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace beg {

using Json = nlohmann::ordered_json;

// Shortest decimal that reads back to the same double.
std::string format_double(double v);

// [[x,y], ...] in row-major order.
Json region_to_json(const Region& R);
Region region_from_json(const Json& j);

// {"window": [xmin, xmax, ymin, ymax], "epsilon": e, "rows": ["3M2P3M", ...]}
// Rows run from ymin upward; each is a sequence of <count><letter> runs over
// M (-1), Z (0) and P (+1) covering the window width.
Json grid_to_json(const SpinGrid& u);
SpinGrid grid_from_json(const Json& j);
std::string encode_row(const SpinGrid& u, int y);

Json params_to_json(const ModelParams& p);

// One JSON object per line; the j = 0 line carries the run header.
void write_trace_jsonl(std::ostream& os, const FlowTrace& trace, const Json& header);

// t,P1,P2,P3,P4,D1,D2,D3,D4,nZ,energy. Unclassifiable shapes leave P and D blank.
void write_side_csv(std::ostream& os, const std::vector<SideRow>& rows);
// t,P1,P2,P3,P4,D1,D2,D3,D4,event
void write_continuum_csv(std::ostream& os, const ContinuumTrace& trace);
// j,empty,alpha1..alpha4,beta1..beta4,energy,d1,d0,total
void write_audit_csv(std::ostream& os, const std::vector<AuditEntry>& audit);
// epsilon,sup_hausdorff,samples,expected
void write_compare_csv(std::ostream& os, const std::vector<CompareRow>& rows);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace beg
