#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wsnsim/config.hpp"
#include "wsnsim/metrics.hpp"
#include "wsnsim/report.hpp"
#include "wsnsim/rng.hpp"
#include "wsnsim/simulator.hpp"
#include "wsnsim/version.hpp"

namespace py = pybind11;
using namespace wsnsim;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Round-based simulator for energy-aware cluster-head election "
            "in heterogeneous sensor networks";
  m.attr("__version__") = kVersion;
  m.attr("RNG_ALGORITHM") = UniformRng::kAlgorithm;

  py::enum_<NodeClass>(m, "NodeClass")
      .value("Normal", NodeClass::Normal)
      .value("Advanced", NodeClass::Advanced)
      .value("Super", NodeClass::Super)
      .value("UltraSuper", NodeClass::UltraSuper);

  py::enum_<Strategy>(m, "Strategy")
      .value("LEACH", Strategy::LEACH)
      .value("DEEC", Strategy::DEEC)
      .value("EDEEC", Strategy::EDEEC)
      .value("BEENISH", Strategy::BEENISH);

  py::class_<RadioParams>(m, "RadioParams")
      .def(py::init<>())
      .def_readwrite("e_elec", &RadioParams::e_elec)
      .def_readwrite("eps_fs", &RadioParams::eps_fs)
      .def_readwrite("eps_mp", &RadioParams::eps_mp)
      .def_readwrite("e_da", &RadioParams::e_da)
      .def_readwrite("packet_bits", &RadioParams::packet_bits)
      .def("validate", &RadioParams::validate);

  py::class_<HeterogeneityParams>(m, "HeterogeneityParams")
      .def(py::init<>())
      .def_readwrite("m", &HeterogeneityParams::m)
      .def_readwrite("m0", &HeterogeneityParams::m0)
      .def_readwrite("m1", &HeterogeneityParams::m1)
      .def_readwrite("a", &HeterogeneityParams::a)
      .def_readwrite("b", &HeterogeneityParams::b)
      .def_readwrite("u", &HeterogeneityParams::u)
      .def_readwrite("e0", &HeterogeneityParams::e0)
      .def_readwrite("p_opt", &HeterogeneityParams::p_opt)
      .def("validate", &HeterogeneityParams::validate);

  py::class_<ClassCounts>(m, "ClassCounts")
      .def(py::init<>())
      .def_readwrite("normal", &ClassCounts::normal)
      .def_readwrite("advanced", &ClassCounts::advanced)
      .def_readwrite("super_", &ClassCounts::super)
      .def_readwrite("ultra", &ClassCounts::ultra)
      .def("__repr__", [](const ClassCounts& c) {
        return "ClassCounts(normal=" + std::to_string(c.normal) +
               ", advanced=" + std::to_string(c.advanced) +
               ", super_=" + std::to_string(c.super) +
               ", ultra=" + std::to_string(c.ultra) + ")";
      });

  py::class_<SimConfig>(m, "SimConfig")
      .def(py::init<>())
      .def_readwrite("n_nodes", &SimConfig::n_nodes)
      .def_readwrite("field_side", &SimConfig::field_side)
      .def_readwrite("bs_x", &SimConfig::bs_x)
      .def_readwrite("bs_y", &SimConfig::bs_y)
      .def_readwrite("radio", &SimConfig::radio)
      .def_readwrite("het", &SimConfig::het)
      .def_readwrite("strategy", &SimConfig::strategy)
      .def_readwrite("seed", &SimConfig::seed)
      .def_readwrite("max_rounds", &SimConfig::max_rounds)
      .def("validate", &SimConfig::validate);

  py::class_<NodeState>(m, "NodeState")
      .def(py::init<>())
      .def_readwrite("id", &NodeState::id)
      .def_readwrite("x", &NodeState::x)
      .def_readwrite("y", &NodeState::y)
      .def_readwrite("cls", &NodeState::cls)
      .def_readwrite("initial_energy", &NodeState::initial_energy)
      .def_readwrite("residual_energy", &NodeState::residual_energy)
      .def_readwrite("alive", &NodeState::alive)
      .def_readwrite("ch_blocked_until", &NodeState::ch_blocked_until);

  py::class_<ClusterAssignment> cluster(m, "ClusterAssignment");
  cluster.def(py::init<>())
      .def_readwrite("ch_ids", &ClusterAssignment::ch_ids)
      .def_readwrite("target", &ClusterAssignment::target);
  cluster.attr("TO_BS") = int(ClusterAssignment::kToBs);
  cluster.attr("NONE") = int(ClusterAssignment::kNone);

  py::class_<RoundOutcome>(m, "RoundOutcome")
      .def(py::init<>())
      .def_readwrite("round", &RoundOutcome::round)
      .def_readwrite("alive", &RoundOutcome::alive)
      .def_readwrite("ch_count", &RoundOutcome::ch_count)
      .def_readwrite("packets_to_ch", &RoundOutcome::packets_to_ch)
      .def_readwrite("packets_to_bs", &RoundOutcome::packets_to_bs)
      .def_readwrite("energy_consumed", &RoundOutcome::energy_consumed)
      .def_readwrite("total_residual", &RoundOutcome::total_residual);

  py::class_<SimSummary>(m, "SimSummary")
      .def(py::init<>())
      .def_readwrite("first_death_round", &SimSummary::first_death_round)
      .def_readwrite("half_death_round", &SimSummary::half_death_round)
      .def_readwrite("last_death_round", &SimSummary::last_death_round)
      .def_readwrite("total_packets_to_bs", &SimSummary::total_packets_to_bs)
      .def_readwrite("total_packets_to_ch", &SimSummary::total_packets_to_ch)
      .def_readwrite("rounds_simulated", &SimSummary::rounds_simulated)
      .def_readwrite("truncated", &SimSummary::truncated);

  py::class_<SimResult>(m, "SimResult")
      .def(py::init<>())
      .def_readwrite("rounds", &SimResult::rounds)
      .def_readwrite("summary", &SimResult::summary);

  py::class_<MetricStats>(m, "MetricStats")
      .def(py::init<>())
      .def_readwrite("median", &MetricStats::median)
      .def_readwrite("q1", &MetricStats::q1)
      .def_readwrite("q3", &MetricStats::q3)
      .def_readwrite("iqr", &MetricStats::iqr);

  py::class_<SweepResult>(m, "SweepResult")
      .def(py::init<>())
      .def_readwrite("strategy", &SweepResult::strategy)
      .def_readwrite("seeds", &SweepResult::seeds)
      .def_readwrite("summaries", &SweepResult::summaries)
      .def_readwrite("first_death", &SweepResult::first_death)
      .def_readwrite("half_death", &SweepResult::half_death)
      .def_readwrite("last_death", &SweepResult::last_death)
      .def_readwrite("packets_to_bs", &SweepResult::packets_to_bs)
      .def_readwrite("packets_to_ch", &SweepResult::packets_to_ch);

  py::class_<Comparison>(m, "Comparison")
      .def(py::init<>())
      .def_readwrite("rows", &Comparison::rows)
      .def_readwrite("rank_first_death", &Comparison::rank_first_death)
      .def_readwrite("rank_last_death", &Comparison::rank_last_death)
      .def_readwrite("rank_packets_to_bs", &Comparison::rank_packets_to_bs);

  py::class_<UniformRng>(m, "UniformRng")
      .def(py::init<std::uint64_t>(), py::arg("seed"))
      .def("next", &UniformRng::next,
           "Next variate, uniform on [0, 1) with 53 random bits.");

  // radio energy model
  m.def("threshold_distance", &threshold_distance, py::arg("radio"),
        "Crossover distance between the free-space and multipath regimes.");
  m.def("tx_energy", &tx_energy, py::arg("radio"), py::arg("bits"),
        py::arg("distance"), "Energy to transmit a frame over a distance.");
  m.def("rx_energy", &rx_energy, py::arg("radio"), py::arg("bits"),
        "Energy to receive a frame.");
  m.def("aggregation_energy", &aggregation_energy, py::arg("radio"),
        py::arg("bits"), py::arg("signals"),
        "Energy to fuse a number of same-length frames.");
  m.def("avg_dist_to_ch", &avg_dist_to_ch, py::arg("field_side"),
        py::arg("clusters"), "Expected member-to-head distance.");
  m.def("avg_dist_to_bs", &avg_dist_to_bs, py::arg("field_side"),
        "Expected node-to-sink distance for a centred sink.");
  m.def("round_energy", &round_energy, py::arg("radio"), py::arg("n_nodes"),
        py::arg("clusters"), py::arg("field_side"),
        "Expected network-wide dissipation of one full round.");
  m.def("optimal_cluster_count", &optimal_cluster_count, py::arg("radio"),
        py::arg("n_nodes"), py::arg("field_side"), py::arg("d_to_bs"),
        "Round-trip-optimal cluster count, at least 1.");

  // election model
  m.def("class_counts", &class_counts, py::arg("n_nodes"), py::arg("het"),
        "Nodes per energy tier; the four counts sum to n_nodes.");
  m.def("node_class", &node_class, py::arg("node_id"), py::arg("n_nodes"),
        py::arg("het"), "Tier of one node under the block layout.");
  m.def("initial_energy", &initial_energy, py::arg("cls"), py::arg("het"),
        "Starting energy of a node of the given tier.");
  m.def("total_energy", &total_energy, py::arg("n_nodes"), py::arg("het"),
        "Network-wide starting energy, closed form.");
  m.def("energy_denominator", &energy_denominator, py::arg("het"),
        "Mean energy multiplier of the mix relative to the normal tier.");
  m.def("average_energy_estimate", &average_energy_estimate, py::arg("round"),
        py::arg("total_rounds"), py::arg("e_total"), py::arg("n_nodes"),
        "Linear per-node average-energy estimate; clamps at zero.");
  m.def("lifetime_estimate", &lifetime_estimate, py::arg("e_total"),
        py::arg("e_round"), "Whole rounds the energy budget sustains.");
  m.def("election_probability", &election_probability, py::arg("strategy"),
        py::arg("cls"), py::arg("residual"), py::arg("avg_energy"),
        py::arg("het"), "Per-round head probability, clamped to (0, 1].");
  m.def("ch_threshold", &ch_threshold, py::arg("p"), py::arg("round"),
        py::arg("eligible"),
        "Rotation threshold; zero when ineligible, sweeps to 1 over an epoch.");
  m.def("epoch_length", &epoch_length, py::arg("p"),
        "Rounds per rotation epoch, nearest integer to 1/p, at least 1.");
  m.def("strategy_from_string", &strategy_from_string, py::arg("name"));
  m.def("strategy_name", [](Strategy s) { return to_string(s); },
        py::arg("strategy"));

  // simulator
  m.def("deploy", &deploy, py::arg("config"), py::arg("rng"),
        "Place nodes uniformly and assign tiers in id blocks.");
  m.def("form_clusters", &form_clusters, py::arg("nodes"), py::arg("ch_ids"),
        py::arg("config"),
        "Join alive non-heads to the nearest head; sink-direct if no heads.");
  m.def("run", &run, py::arg("config"),
        py::call_guard<py::gil_scoped_release>(),
        "Full lifetime simulation; deterministic per seed.");

  // metrics
  m.def("quantile", &quantile, py::arg("values"), py::arg("q"),
        "Linear-interpolation quantile of a sample.");
  m.def("summarize", &summarize, py::arg("series"), py::arg("n_nodes"),
        "Death rounds and packet totals of one finished run.");
  m.def("sweep", &sweep, py::arg("config"), py::arg("seeds"),
        py::call_guard<py::gil_scoped_release>(),
        "Run one config across seeds and aggregate the metrics.");
  m.def("compare", &compare, py::arg("configs"), py::arg("seeds"),
        py::call_guard<py::gil_scoped_release>(),
        "Paired sweep of several strategies over the same seeds.");

  // config and formatting
  m.def("default_config", &default_config, "The documented defaults.");
  m.def("parse_config", &parse_config, py::arg("text"),
        py::arg("overrides") = std::vector<std::string>{},
        "Parse key=value text, apply overrides, validate.");
  m.def("load_config", &load_config, py::arg("path"),
        py::arg("overrides") = std::vector<std::string>{},
        "parse_config over a file's contents.");
  m.def("config_keys", &config_keys, "Recognised keys in echo order.");
  m.def("config_echo", &config_echo, py::arg("config"),
        "The config as re-parseable (key, value) pairs.");
  m.def("format_g9", &format_g9, py::arg("value"),
        "Nine-significant-digit rendering used in CSV bodies.");
  m.def("format_exact", &format_exact, py::arg("value"),
        "Shortest representation that parses back to the same double.");
}
