// SPDX-License-Identifier: Apache-2.0
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "sumrank/cli.hpp"
#include "sumrank/rng.hpp"

namespace py = pybind11;
using namespace sumrank;

namespace {

using Indices = std::vector<std::uint64_t>;

Word to_word(const Field& f, const Indices& v) {
    Word w;
    for (auto x : v) w.push_back(f.from_index(x));
    return w;
}

Indices to_indices(std::span<const Elem> w) {
    Indices out;
    for (auto x : w) out.push_back(x.value);
    return out;
}

std::vector<Indices> to_rows(const Field& f, const Mat& m, bool labels) {
    std::vector<Indices> out(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (auto x : m.row(r)) out[r].push_back(labels ? f.fq_label(x) : x.value);
    }
    return out;
}

Mat from_labels(const Field& f, const std::vector<Indices>& rows, std::size_t cols) {
    Mat m(rows.size(), cols, Over::base);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw ParameterError("column-erasure location rows must have length n_i");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = f.fq_from_label(rows[r][c]);
    }
    return m;
}

py::dict result_dict(const Code& code, const DecodeResult& r) {
    py::dict d;
    d["ok"] = r.ok();
    if (r.ok()) {
        Word msg = r.decoded().message.coeffs;
        msg.resize(code.k(), Field::zero());
        d["codeword"] = to_indices(r.decoded().codeword);
        d["message"] = to_indices(msg);
        d["error"] = to_indices(r.decoded().error);
        d["full_rank"] = r.decoded().full_rank;
    } else {
        d["reason"] = r.failure().reason;
    }
    return d;
}

Variant parse_variant(const std::string& v) {
    if (v == "esp") return Variant::esp;
    if (v == "elp") return Variant::elp;
    throw ParameterError("variant must be 'esp' or 'elp'");
}

}  // namespace

PYBIND11_MODULE(_sumrank, m) {
    m.doc() = "Linearized Reed-Solomon codes and their error-erasure decoder";
    py::register_exception<ParameterError>(m, "ParameterError", PyExc_ValueError);

    py::class_<Field, std::shared_ptr<Field>>(m, "Field")
        .def(py::init([](unsigned p, unsigned e, unsigned mm, long s) { return std::const_pointer_cast<Field>(Field::make(p, e, mm, s)); }),
             py::arg("p"), py::arg("e") = 1, py::arg("m"), py::arg("s") = 1)
        .def_property_readonly("p", &Field::p)
        .def_property_readonly("q", &Field::q)
        .def_property_readonly("m", &Field::m)
        .def_property_readonly("order", &Field::order)
        .def_property_readonly("gamma", [](const Field& f) { return f.gamma().value; })
        .def_property_readonly("class_count", &Field::class_count)
        .def("add", [](const Field& f, std::uint64_t a, std::uint64_t b) {
            return f.add(f.from_index(a), f.from_index(b)).value;
        })
        .def("mul", [](const Field& f, std::uint64_t a, std::uint64_t b) {
            return f.mul(f.from_index(a), f.from_index(b)).value;
        })
        .def("inv", [](const Field& f, std::uint64_t a) {
            if (a == 0) throw ParameterError("zero has no inverse");
            return f.inv(f.from_index(a)).value;
        })
        .def("frobenius", [](const Field& f, std::uint64_t a, long t) { return f.frobenius(f.from_index(a), t).value; },
             py::arg("a"), py::arg("t") = 1)
        .def("expand", [](const Field& f, std::uint64_t a) {
            Indices out;
            for (auto c : f.expand(f.from_index(a))) out.push_back(f.fq_label(c));
            return out;
        })
        .def("__repr__", &Field::describe);

    py::class_<Code>(m, "Code")
        .def(py::init([](std::shared_ptr<Field> f, std::vector<std::size_t> n, std::size_t k) {
                 return Code::make(std::move(f), LengthPartition(std::move(n)), k);
             }),
             py::arg("field"), py::arg("n"), py::arg("k"))
        .def_property_readonly("field", [](const Code& c) { return std::const_pointer_cast<Field>(c.field_ptr()); })
        .def_property_readonly("n", &Code::n)
        .def_property_readonly("k", &Code::k)
        .def_property_readonly("d", &Code::min_distance)
        .def_property_readonly("blocks", [](const Code& c) { return c.partition().sizes(); })
        .def_property_readonly("xi", [](const Code& c) { return to_indices(c.xi()); })
        .def_property_readonly("alpha", [](const Code& c) { return to_indices(c.alpha()); })
        .def("generator", [](const Code& c) { return to_rows(c.field(), c.generator(), false); })
        .def("parity_check", [](const Code& c) { return to_rows(c.field(), c.parity_check(), false); })
        .def("encode", [](const Code& c, const Indices& msg) { return to_indices(c.encode(to_word(c.field(), msg))); })
        .def("syndrome", [](const Code& c, const Indices& y) { return to_indices(c.syndrome(to_word(c.field(), y))); })
        .def("contains", [](const Code& c, const Indices& y) { return c.contains(to_word(c.field(), y)); })
        .def("weight", [](const Code& c, const Indices& y) { return weight(c.field(), to_word(c.field(), y), c.partition()); });

    m.def(
        "decode",
        [](const Code& code, const Indices& y, std::optional<std::vector<Indices>> row_values,
           std::optional<std::vector<std::vector<Indices>>> col_locations, const std::string& variant) {
            const Field& f = code.field();
            SideInfo side = SideInfo::none(f, code.partition());
            if (row_values) {
                if (row_values->size() != code.blocks()) throw ParameterError("row_values needs one list per block");
                for (std::size_t i = 0; i < code.blocks(); ++i) side.row_values[i] = to_word(f, (*row_values)[i]);
            }
            if (col_locations) {
                if (col_locations->size() != code.blocks()) {
                    throw ParameterError("col_locations needs one matrix per block");
                }
                for (std::size_t i = 0; i < code.blocks(); ++i) {
                    side.col_locations[i] = from_labels(f, (*col_locations)[i], code.partition().size(i));
                }
            }
            py::gil_scoped_release release;
            DecodeResult r = Decoder(code).decode(to_word(f, y), side, parse_variant(variant));
            py::gil_scoped_acquire acquire;
            return result_dict(code, r);
        },
        py::arg("code"), py::arg("received"), py::arg("row_values") = py::none(),
        py::arg("col_locations") = py::none(), py::arg("variant") = "esp",
        "Decodes a received word. Column-erasure locations are F_q label matrices.");

    m.def(
        "corrupt",
        [](const Code& code, const Indices& codeword, std::vector<std::size_t> full, std::vector<std::size_t> row,
           std::vector<std::size_t> col, std::uint64_t seed) {
            const Field& f = code.field();
            if (full.size() != code.blocks() || row.size() != code.blocks() || col.size() != code.blocks()) {
                throw ParameterError("profile lists need one entry per block");
            }
            ErrorProfile prof;
            for (std::size_t i = 0; i < code.blocks(); ++i) prof.push_back({full[i], row[i], col[i]});
            Rng rng(seed);
            const auto [pattern, side] = sample_error(f, code.partition(), prof, rng);
            const Word c = to_word(f, codeword), e = pattern.realize(f);
            Word y(c.size());
            for (std::size_t j = 0; j < c.size(); ++j) y[j] = f.add(c[j], e[j]);
            py::dict d;
            d["received"] = to_indices(y);
            d["error"] = to_indices(e);
            std::vector<Indices> rv;
            std::vector<std::vector<Indices>> cl;
            for (const auto& v : side.row_values) rv.push_back(to_indices(v));
            for (const auto& mm : side.col_locations) cl.push_back(to_rows(f, mm, true));
            d["row_values"] = rv;
            d["col_locations"] = cl;
            return d;
        },
        py::arg("code"), py::arg("codeword"), py::arg("full"), py::arg("row"), py::arg("col"), py::arg("seed") = 1);

    m.def(
        "lift_channel_decode",
        [](const Code& code, const Indices& codeword, std::vector<std::size_t> insertions,
           std::vector<std::size_t> deletions, std::uint64_t seed, const std::string& variant) {
            const Field& f = code.field();
            if (insertions.size() != code.blocks() || deletions.size() != code.blocks()) {
                throw ParameterError("insertions and deletions need one entry per shot");
            }
            std::vector<ShotRequest> req;
            for (std::size_t i = 0; i < code.blocks(); ++i) req.push_back({insertions[i], deletions[i]});
            Rng rng(seed);
            const LiftedWord got = operator_channel(f, lift(code, to_word(f, codeword)), req, rng);
            const Reduction red = reduce(code, got);
            py::dict d = result_dict(code, Decoder(code).decode(red.received, red.side, parse_variant(variant)));
            d["row_erasures"] = red.row_erasures;
            d["col_erasures"] = red.col_erasures;
            return d;
        },
        py::arg("code"), py::arg("codeword"), py::arg("insertions"), py::arg("deletions"), py::arg("seed") = 1,
        py::arg("variant") = "esp");

    m.def(
        "run_cli",
        [](std::vector<std::string> args) {
            args.insert(args.begin(), "sumrank");
            std::vector<const char*> argv;
            for (const auto& a : args) argv.push_back(a.c_str());
            std::ostringstream out, err;
            const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Runs the command-line front end; returns (exit_code, stdout, stderr).");
}
