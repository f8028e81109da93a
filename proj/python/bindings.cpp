#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lattica/context.hpp"
#include "lattica/error.hpp"
#include "lattica/lattice.hpp"
#include "lattica/motifs.hpp"
#include "lattica/reduction.hpp"
#include "lattica/render.hpp"
#include "lattica/rules.hpp"
#include "lattica/scaling.hpp"

namespace py = pybind11;
using namespace lattica;

namespace {

using Labels = std::vector<std::string>;

Labels names(const std::vector<std::string>& labels, const Bitset& s) {
    Labels v;
    s.for_each([&](std::size_t i) { v.push_back(labels[i]); });
    return v;
}

py::object fraction(const Rational& r) {
    static py::object cls = py::module_::import("fractions").attr("Fraction");
    return cls(r.num(), r.den());
}

Rational to_rational(const py::handle& h) {
    return Rational::parse(py::str(h).cast<std::string>());
}

py::dict concept_dict(const ConceptLattice& l, const FormalContext& ctx, std::size_t i) {
    py::dict d;
    d["intent"] = names(ctx.attributes(), l[i].intent);
    if (l.has_extents()) d["extent"] = names(ctx.objects(), l[i].extent);
    d["extent_size"] = l[i].extent_size;
    return d;
}

MotifFamily family(const std::string& name) { return parse_motif_family(name); }

}  // namespace

PYBIND11_MODULE(_lattica, m) {
    m.doc() = "Formal concept analysis for topic-model views";

    static py::exception<CeilingError> ceiling(m, "CeilingError", PyExc_RuntimeError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const CeilingError& e) {
            py::set_error(ceiling, e.what());
        } catch (const InputError& e) {
            py::set_error(PyExc_ValueError, e.what());
        }
    });

    py::class_<FormalContext>(m, "Context")
        .def(py::init([](Labels objects, Labels attributes, std::vector<std::string> rows) {
                 return FormalContext::from_rows(std::move(objects), std::move(attributes), rows);
             }),
             py::arg("objects"), py::arg("attributes"), py::arg("rows"),
             "Rows are strings over 'X' (incident) and '.'.")
        .def_static("from_cxt", [](const std::string& text) { return parse_cxt(text); })
        .def_static("load", &load_context, py::arg("path"))
        .def("to_cxt", [](const FormalContext& c) { return emit_cxt(c); })
        .def("to_json", [](const FormalContext& c) { return emit_context_json(c); })
        .def_property_readonly("objects", &FormalContext::objects)
        .def_property_readonly("attributes", &FormalContext::attributes)
        .def_property_readonly("shape", [](const FormalContext& c) {
            return py::make_tuple(c.object_count(), c.attribute_count());
        })
        .def("incident", [](const FormalContext& c, const std::string& g, const std::string& a) {
            return c.incident(c.object_index(g), c.attribute_index(a));
        })
        .def("density", &FormalContext::density)
        .def("object_derive", [](const FormalContext& c, const Labels& objs) {
            return names(c.attributes(), c.object_derive(c.objects_named(objs)));
        })
        .def("attribute_derive", [](const FormalContext& c, const Labels& atts) {
            return names(c.objects(), c.attribute_derive(c.attributes_named(atts)));
        })
        .def("closure", [](const FormalContext& c, const Labels& atts) {
            return names(c.attributes(), c.closure(c.attributes_named(atts)));
        })
        .def("induced", [](const FormalContext& c, const Labels& objs, const Labels& atts) {
            return c.induced(c.objects_named(objs), c.attributes_named(atts));
        })
        .def("__eq__", [](const FormalContext& a, const FormalContext& b) { return a == b; })
        .def("__repr__", [](const FormalContext& c) {
            return "<Context " + std::to_string(c.object_count()) + "x" + std::to_string(c.attribute_count()) + ">";
        });

    m.def(
        "concepts",
        [](const FormalContext& ctx, std::size_t max_concepts) {
            EnumerationOptions o;
            o.max_concepts = max_concepts;
            auto l = enumerate_concepts(ctx, o);
            py::list out;
            for (std::size_t i = 0; i < l.size(); ++i) out.append(concept_dict(l, ctx, i));
            return out;
        },
        py::arg("ctx"), py::arg("max_concepts") = 100000, "All concepts in lectic order of their intents.");
    m.def(
        "lattice",
        [](const FormalContext& ctx, std::size_t max_concepts) {
            EnumerationOptions o;
            o.max_concepts = max_concepts;
            auto l = enumerate_concepts(ctx, o);
            py::list cs;
            for (std::size_t i = 0; i < l.size(); ++i) cs.append(concept_dict(l, ctx, i));
            py::dict d;
            d["concepts"] = cs;
            d["covers"] = l.covers();
            d["width"] = width(l);
            return d;
        },
        py::arg("ctx"), py::arg("max_concepts") = 100000, "Concepts, cover pairs (lower, upper) and width.");
    m.def(
        "count_concepts",
        [](const FormalContext& ctx, std::size_t max_concepts) {
            EnumerationOptions o;
            o.max_concepts = max_concepts;
            return count_concepts(ctx, o);
        },
        py::arg("ctx"), py::arg("max_concepts") = 100000);

    m.def(
        "threshold_scale",
        [](const std::vector<std::vector<double>>& w, Labels rows, Labels cols, double delta) {
            std::vector<double> flat;
            for (const auto& r : w) {
                if (r.size() != cols.size()) throw InputError("ragged weight matrix");
                flat.insert(flat.end(), r.begin(), r.end());
            }
            return threshold_scale(WeightMatrix(std::move(rows), std::move(cols), std::move(flat)), delta);
        },
        py::arg("weights"), py::arg("rows"), py::arg("cols"), py::arg("delta"));
    m.def(
        "topn_scale",
        [](const std::vector<std::vector<double>>& w, Labels rows, Labels cols, std::size_t n) {
            std::vector<double> flat;
            for (const auto& r : w) {
                if (r.size() != cols.size()) throw InputError("ragged weight matrix");
                flat.insert(flat.end(), r.begin(), r.end());
            }
            return topn_scale(WeightMatrix(std::move(rows), std::move(cols), std::move(flat)), n);
        },
        py::arg("weights"), py::arg("rows"), py::arg("cols"), py::arg("n"));

    m.def(
        "pq_core",
        [](const FormalContext& ctx, std::size_t p, std::size_t q) { return pq_core(ctx, p, q).core; },
        py::arg("ctx"), py::arg("p"), py::arg("q"));
    m.def(
        "support",
        [](const FormalContext& ctx, const Labels& atts) { return fraction(intent_support(ctx, ctx.attributes_named(atts))); },
        py::arg("ctx"), py::arg("intent"));
    m.def(
        "iceberg",
        [](const FormalContext& ctx, const py::object& minsupp) {
            auto ice = titanic_iceberg(ctx, to_rational(minsupp));
            py::list out;
            for (std::size_t i = 0; i < ice.size(); ++i)
                out.append(py::make_tuple(names(ctx.attributes(), ice.intents()[i]), fraction(ice.supports()[i])));
            return out;
        },
        py::arg("ctx"), py::arg("minsupp"), "Frequent closed intents with exact supports.");
    m.def(
        "rules",
        [](const FormalContext& ctx, const py::object& minsupp, const py::object& minconf) {
            auto basis = luxenburger_basis(ctx, to_rational(minsupp), to_rational(minconf));
            py::list out;
            for (const auto& r : basis.rules)
                out.append(py::make_tuple(names(ctx.attributes(), r.body), names(ctx.attributes(), r.head),
                                          fraction(r.support), fraction(r.confidence)));
            return out;
        },
        py::arg("ctx"), py::arg("minsupp") = "3/100", py::arg("minconf") = "1/2",
        "Luxenburger basis as (body, head, support, confidence).");

    m.def("motif_families", [] {
        Labels v;
        for (auto f : all_motif_families()) v.emplace_back(to_string(f));
        return v;
    });
    m.def(
        "is_motif",
        [](const FormalContext& ctx, const Labels& atts, const std::string& fam) {
            return satisfies(ctx, ctx.attributes_named(atts), family(fam));
        },
        py::arg("ctx"), py::arg("attributes"), py::arg("family"));
    m.def(
        "maximal_motifs",
        [](const FormalContext& ctx, const std::string& fam) {
            std::vector<Labels> out;
            for (const auto& s : maximal_motifs(ctx, family(fam))) out.push_back(names(ctx.attributes(), s));
            return out;
        },
        py::arg("ctx"), py::arg("family"));
    m.def(
        "geometric_structure",
        [](const FormalContext& ctx, const Labels& fams) {
            std::vector<MotifFamily> fs;
            for (const auto& f : fams) fs.push_back(family(f));
            return geometric_structure_to_json(geometric_structure(ctx, fs));
        },
        py::arg("ctx"), py::arg("families"), "JSON text of the geometric structure.");
    m.def(
        "draw_lattice_svg",
        [](const FormalContext& ctx, bool tulip, bool omit_bottom) {
            LatticeDrawOptions o;
            o.tulip = tulip;
            o.omit_bottom = omit_bottom;
            return emit_svg(draw_lattice(enumerate_concepts(ctx), ctx, o));
        },
        py::arg("ctx"), py::arg("tulip") = false, py::arg("omit_bottom") = false);
    m.def(
        "draw_geometric_svg",
        [](const FormalContext& ctx, const Labels& fams, std::uint64_t seed) {
            std::vector<MotifFamily> fs;
            for (const auto& f : fams) fs.push_back(family(f));
            GeometricDrawOptions o;
            o.seed = seed;
            return emit_svg(draw_geometric(geometric_structure(ctx, fs), o));
        },
        py::arg("ctx"), py::arg("families"), py::arg("seed") = 1);
}
