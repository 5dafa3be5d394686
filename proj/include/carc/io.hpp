#ifndef CARC_IO_HPP
#define CARC_IO_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "carc/graph.hpp"
#include "carc/model.hpp"

namespace carc {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// .cam: line 1 "n"; line 2: 2n tokens s<i>/t<i> in clockwise order.
CircularArcModel parse_model(std::istream& in);
void write_model(std::ostream& out, const CircularArcModel& m);

// .g: line 1 "n m"; then m lines "u v" (0-based).
Graph parse_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g);

CircularArcModel load_model(const std::string& path);
Graph load_graph(const std::string& path);

} // namespace carc

#endif
