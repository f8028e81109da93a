#include "lattica/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <random>

#include "lattica/error.hpp"

namespace lattica {

namespace {

std::string trim(std::string_view s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

std::string abbreviate(const LabelMap& labels, const std::string& name) {
    auto it = labels.find(name);
    return it == labels.end() ? name : it->second;
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

}  // namespace

LabelMap parse_label_map(std::string_view text) {
    LabelMap out;
    std::size_t pos = 0, line = 0;
    while (pos <= text.size()) {
        auto eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        auto raw = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line;
        auto t = trim(raw);
        if (t.empty() || t[0] == '#') continue;
        auto eq = t.find('=');
        if (eq == std::string::npos) throw ParseError(line, "expected 'label = abbreviation'");
        auto key = trim(std::string_view(t).substr(0, eq));
        auto val = trim(std::string_view(t).substr(eq + 1));
        if (key.empty()) throw ParseError(line, "empty label");
        out[key] = val;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Hasse diagrams

namespace {

using Point = std::pair<double, double>;

// Template positions of the inner subsets of a 3- or 4-element attribute set,
// keyed by subset bitmask over the chosen attributes.
std::map<unsigned, Point> tulip_template(std::size_t k) {
    std::map<unsigned, Point> pos;
    if (k == 3) {
        pos[0b001] = {-1.0, 2.0};
        pos[0b010] = {0.0, 2.0};
        pos[0b100] = {1.0, 2.0};
        pos[0b011] = {-0.4, 1.5};
        pos[0b110] = {0.4, 1.5};
        pos[0b101] = {0.0, 1.0};
        return pos;
    }
    // Barycentric (Tutte) embedding of the 4-cube without its two antipodal
    // corners, outer face {0},{0,1},{0,1,2},{0,2}.
    const std::map<unsigned, Point> fixed{{0b0001, {0.0, 3.0}},
                                          {0b0011, {-2.0, 1.5}},
                                          {0b0111, {0.0, 0.0}},
                                          {0b0101, {2.0, 1.5}}};
    for (unsigned m = 1; m < 15; ++m) pos[m] = fixed.count(m) ? fixed.at(m) : Point{0.0, 1.5};
    for (int it = 0; it < 5000; ++it) {
        double change = 0;
        for (unsigned m = 1; m < 15; ++m) {
            if (fixed.count(m)) continue;
            double sx = 0, sy = 0;
            int deg = 0;
            for (unsigned b = 0; b < 4; ++b) {
                unsigned nb = m ^ (1u << b);
                if (nb == 0 || nb == 15) continue;
                sx += pos[nb].first;
                sy += pos[nb].second;
                ++deg;
            }
            Point p{sx / deg, sy / deg};
            change = std::max({change, std::abs(p.first - pos[m].first), std::abs(p.second - pos[m].second)});
            pos[m] = p;
        }
        if (change < 1e-13) break;
    }
    return pos;
}

std::vector<std::size_t> pick_tulip_attributes(const FormalContext& ctx, const LatticeDrawOptions& opts) {
    if (!opts.tulip_attributes.empty()) {
        auto n = ctx.attributes_named(opts.tulip_attributes);
        auto ns = n.indices();
        if (ns.size() < 3 || ns.size() > 4) throw InputError("tulip layout needs 3 or 4 attributes");
        if (!is_contranominal(ctx, n).ok) throw InputError("tulip attributes are not contranominal");
        return ns;
    }
    if (ctx.attribute_count() < 3 || ctx.attribute_count() > MotifSearchOptions{}.max_attributes) return {};
    std::vector<std::size_t> best;
    for (const auto& s : maximal_motifs(ctx, MotifFamily::Contranominal)) {
        auto ns = s.indices();
        if (ns.size() > 4) ns.resize(4);  // subsets of contranominal sets stay contranominal
        if (ns.size() >= 3 && ns.size() > best.size()) best = ns;
    }
    return best;
}

}  // namespace

Scene draw_lattice(const ConceptLattice& lattice, const FormalContext& ctx, const LatticeDrawOptions& opts) {
    const std::size_t n = lattice.size();
    std::vector<bool> shown(n, true);
    if (opts.omit_bottom && n > 1 && lattice[lattice.bottom()].extent_size == 0) shown[lattice.bottom()] = false;
    const auto shown_count = static_cast<std::size_t>(std::count(shown.begin(), shown.end(), true));
    if (shown_count > opts.max_nodes)
        throw CeilingError("lattice too large to draw: " + std::to_string(shown_count) + " concepts, limit " +
                           std::to_string(opts.max_nodes));

    auto rank = lattice.ranks();
    std::size_t max_rank = n ? *std::max_element(rank.begin(), rank.end()) : 0;
    std::vector<std::vector<std::size_t>> layers(max_rank + 1);
    for (std::size_t i = 0; i < n; ++i)
        if (shown[i]) layers[rank[i]].push_back(i);

    // barycenter ordering, alternating downward and upward sweeps
    std::vector<double> x(n, 0.0);
    auto place = [&](const std::vector<std::size_t>& layer) {
        for (std::size_t p = 0; p < layer.size(); ++p)
            x[layer[p]] = static_cast<double>(p) - (static_cast<double>(layer.size()) - 1.0) / 2.0;
    };
    for (const auto& l : layers) place(l);
    auto sweep = [&](std::size_t r, bool use_upper) {
        auto& layer = layers[r];
        std::vector<std::pair<double, std::size_t>> keyed;
        for (auto c : layer) {
            const auto& nb = use_upper ? lattice.upper_covers(c) : lattice.lower_covers(c);
            double s = 0;
            int cnt = 0;
            for (auto o : nb)
                if (shown[o]) s += x[o], ++cnt;
            keyed.emplace_back(cnt ? s / cnt : x[c], c);
        }
        std::stable_sort(keyed.begin(), keyed.end(),
                         [](const auto& a, const auto& b) { return a.first < b.first; });
        for (std::size_t p = 0; p < layer.size(); ++p) layer[p] = keyed[p].second;
        place(layer);
    };
    for (int pass = 0; pass < 4; ++pass) {
        for (std::size_t r = max_rank; r-- > 0;) sweep(r, true);
        for (std::size_t r = 1; r <= max_rank; ++r) sweep(r, false);
    }
    std::vector<double> y(n);
    for (std::size_t i = 0; i < n; ++i) y[i] = static_cast<double>(rank[i]);

    std::vector<std::string> group(n);
    if (opts.tulip) {
        auto ns = pick_tulip_attributes(ctx, opts);
        if (!ns.empty()) {
            const std::size_t k = ns.size();
            auto tmpl = tulip_template(k);
            std::map<unsigned, std::size_t> concept_of;
            for (const auto& [mask, p] : tmpl) {
                AttributeSet s(ctx.attribute_count());
                for (std::size_t b = 0; b < k; ++b)
                    if (mask & (1u << b)) s.set(ns[b]);
                auto id = lattice.find_intent(ctx.closure(s));
                if (!id) throw InputError("tulip attributes do not belong to this lattice");
                concept_of[mask] = *id;
            }
            double cx = 0, rmin = 1e300, rmax = -1e300, tmin = 1e300, tmax = -1e300;
            for (const auto& [mask, id] : concept_of) {
                cx += x[id];
                rmin = std::min(rmin, y[id]);
                rmax = std::max(rmax, y[id]);
                tmin = std::min(tmin, tmpl[mask].second);
                tmax = std::max(tmax, tmpl[mask].second);
            }
            cx /= static_cast<double>(concept_of.size());
            const double sy = tmax > tmin && rmax > rmin ? (rmax - rmin) / (tmax - tmin) : 1.0;
            for (const auto& [mask, id] : concept_of) {
                x[id] = cx + tmpl[mask].first;
                y[id] = rmin + (tmpl[mask].second - tmin) * sy;
                group[id] = "tulip";
            }
        }
    }

    std::vector<std::vector<std::string>> attr_labels(n);
    for (std::size_t m = 0; m < ctx.attribute_count(); ++m)
        attr_labels[lattice.attribute_concept(m)].push_back(abbreviate(opts.labels, ctx.attributes()[m]));

    Scene scene;
    std::vector<std::size_t> node_of(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (!shown[i]) continue;
        node_of[i] = scene.nodes.size();
        SceneNode node;
        node.id = "c" + std::to_string(i);
        node.x = x[i];
        node.y = y[i];
        node.style = "concept";
        node.label_above = join(attr_labels[i], ", ");
        node.label_below = std::to_string(lattice[i].extent_size);
        node.group = group[i];
        scene.nodes.push_back(std::move(node));
    }
    for (const auto& [lo, up] : lattice.covers())
        if (shown[lo] && shown[up]) scene.edges.push_back({node_of[lo], node_of[up], "plain", ""});
    return scene;
}

// ---------------------------------------------------------------------------
// Geometric drawings

Scene draw_geometric(const GeometricStructure& gs, const GeometricDrawOptions& opts) {
    const std::size_t n = gs.attributes.size();
    if (n > opts.max_nodes)
        throw CeilingError("too many attributes to draw: " + std::to_string(n) + ", limit " +
                           std::to_string(opts.max_nodes));
    Scene scene;
    for (std::size_t m = 0; m < n; ++m) {
        SceneNode node;
        node.id = "a" + std::to_string(m);
        node.style = "attribute";
        node.label = abbreviate(opts.labels, gs.attributes[m]);
        scene.nodes.push_back(std::move(node));
    }
    auto object_names = [&](const std::vector<std::size_t>& ids) {
        std::vector<std::string> v;
        for (auto g : ids) v.push_back(gs.objects[g]);
        return join(v, ", ");
    };
    auto add_annotation = [&](std::size_t m, const std::vector<std::size_t>& objs) {
        if (objs.empty()) return;
        auto& lb = scene.nodes[m].label_below;
        lb += (lb.empty() ? "" : " | ") + object_names(objs);
    };

    struct Spring {
        std::size_t a, b;
        double rest, stiffness;
    };
    std::vector<Spring> springs;
    const double pi = std::acos(-1.0);

    auto nominal_edges = [&](const std::vector<NominalMotif>& list) {
        for (const auto& m : list) {
            if (m.no_edge || !m.plus_witness) continue;
            for (std::size_t i = 0; i < m.nodes.size(); ++i)
                for (std::size_t j = i + 1; j < m.nodes.size(); ++j) {
                    scene.edges.push_back({m.nodes[i], m.nodes[j], "nominal", gs.objects[*m.plus_witness]});
                    springs.push_back({m.nodes[i], m.nodes[j], 1.5, 1.0});
                }
        }
    };
    nominal_edges(gs.nominal);
    nominal_edges(gs.nominal_plus);

    for (const auto& m : gs.contranominal) {
        const std::size_t k = m.nodes.size();
        scene.polygons.push_back({m.nodes, "contranominal", "", ""});
        for (const auto& l : m.edge_labels) scene.edges.push_back({l.a, l.b, "contranominal", object_names(l.objects)});
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = i + 1; j < k; ++j) {
                double chord = 2.0 * std::sin(pi * static_cast<double>(j - i) / static_cast<double>(k));
                springs.push_back({m.nodes[i], m.nodes[j], 1.2 * chord, 6.0});
            }
    }
    for (const auto& m : gs.crown) {
        for (std::size_t i = 0; i < m.cycle.size(); ++i) {
            auto a = m.cycle[i], b = m.cycle[(i + 1) % m.cycle.size()];
            scene.edges.push_back({a, b, "cycle", ""});
            springs.push_back({a, b, 1.2, 1.0});
        }
    }
    for (const auto& m : gs.ordinal) {
        const std::size_t k = m.chain.size();
        for (std::size_t i = 0; i < k; ++i) {
            auto& node = scene.nodes[m.chain[i]];
            node.style = "ordinal";
            node.radius = std::max(node.radius, 0.12 + 0.08 * static_cast<double>(k - 1 - i));
            add_annotation(m.chain[i], m.annotations[i]);
            if (i + 1 < k) {
                scene.edges.push_back({m.chain[i], m.chain[i + 1], "overlap", ""});
                springs.push_back({m.chain[i], m.chain[i + 1], 0.15, 3.0});
            }
        }
    }
    for (const auto& m : gs.interordinal) {
        ScenePolygon hull;
        hull.style = "hull";
        hull.nodes = m.chain_a;
        hull.nodes.insert(hull.nodes.end(), m.chain_b.rbegin(), m.chain_b.rend());
        std::vector<std::string> a, b;
        for (auto c : m.chain_a) a.push_back(scene.nodes[c].label);
        for (auto c : m.chain_b) b.push_back(scene.nodes[c].label);
        hull.label_above = join(a, " < ");
        hull.label_below = join(b, " > ");
        scene.polygons.push_back(std::move(hull));
        for (std::size_t i = 0; i < m.chain_a.size(); ++i) {
            add_annotation(m.chain_a[i], m.annotations_a[i]);
            add_annotation(m.chain_b[i], m.annotations_b[i]);
            springs.push_back({m.chain_a[i], m.chain_b[i], 1.0, 0.5});
            if (i + 1 < m.chain_a.size()) {
                springs.push_back({m.chain_a[i], m.chain_a[i + 1], 0.8, 1.0});
                springs.push_back({m.chain_b[i], m.chain_b[i + 1], 0.8, 1.0});
            }
        }
    }

    // seeded force-directed placement
    std::mt19937_64 rng(opts.seed);
    auto unit = [&]() { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
    const double side = std::sqrt(static_cast<double>(std::max<std::size_t>(n, 1))) * 1.5;
    std::vector<double> px(n), py(n);
    for (std::size_t i = 0; i < n; ++i) {
        px[i] = unit() * side;
        py[i] = unit() * side;
    }
    for (std::size_t it = 0; it < opts.iterations; ++it) {
        std::vector<double> fx(n, 0.0), fy(n, 0.0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                double dx = px[i] - px[j], dy = py[i] - py[j];
                double d2 = std::max(dx * dx + dy * dy, 1e-4);
                double f = 0.4 / d2;
                double d = std::sqrt(d2);
                fx[i] += f * dx / d, fy[i] += f * dy / d;
                fx[j] -= f * dx / d, fy[j] -= f * dy / d;
            }
        for (const auto& s : springs) {
            double dx = px[s.b] - px[s.a], dy = py[s.b] - py[s.a];
            double d = std::max(std::sqrt(dx * dx + dy * dy), 1e-6);
            double f = s.stiffness * (d - s.rest);
            fx[s.a] += f * dx / d, fy[s.a] += f * dy / d;
            fx[s.b] -= f * dx / d, fy[s.b] -= f * dy / d;
        }
        double cx = 0, cy = 0;
        for (std::size_t i = 0; i < n; ++i) cx += px[i], cy += py[i];
        cx /= static_cast<double>(std::max<std::size_t>(n, 1));
        cy /= static_cast<double>(std::max<std::size_t>(n, 1));
        const double step = 0.1 * (1.0 - static_cast<double>(it) / static_cast<double>(opts.iterations)) + 0.002;
        for (std::size_t i = 0; i < n; ++i) {
            fx[i] += 0.02 * (cx - px[i]);
            fy[i] += 0.02 * (cy - py[i]);
            double len = std::sqrt(fx[i] * fx[i] + fy[i] * fy[i]);
            double scale = len > step ? step / len : 1.0;
            px[i] += fx[i] * scale;
            py[i] += fy[i] * scale;
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        scene.nodes[i].x = px[i];
        scene.nodes[i].y = py[i];
    }
    return scene;
}

std::size_t edge_crossings(const Scene& scene, const std::vector<std::size_t>& nodes) {
    std::vector<bool> in(scene.nodes.size(), false);
    for (auto v : nodes) in.at(v) = true;
    std::vector<const SceneEdge*> es;
    for (const auto& e : scene.edges)
        if (in[e.from] && in[e.to]) es.push_back(&e);
    auto orient = [&](std::size_t a, std::size_t b, std::size_t c) {
        const auto &p = scene.nodes[a], &q = scene.nodes[b], &r = scene.nodes[c];
        double v = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
        return v > 1e-12 ? 1 : (v < -1e-12 ? -1 : 0);
    };
    std::size_t count = 0;
    for (std::size_t i = 0; i < es.size(); ++i)
        for (std::size_t j = i + 1; j < es.size(); ++j) {
            const auto &e = *es[i], &f = *es[j];
            if (e.from == f.from || e.from == f.to || e.to == f.from || e.to == f.to) continue;
            int o1 = orient(e.from, e.to, f.from), o2 = orient(e.from, e.to, f.to);
            int o3 = orient(f.from, f.to, e.from), o4 = orient(f.from, f.to, e.to);
            if (o1 * o2 < 0 && o3 * o4 < 0) ++count;
        }
    return count;
}

// ---------------------------------------------------------------------------
// Emitters

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    std::string s = buf;
    if (s == "-0.00") s = "0.00";
    return s;
}

std::string xml_escape(std::string_view s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

std::string dot_escape(std::string_view s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

}  // namespace

std::string emit_svg(const Scene& scene, const SvgOptions& opts) {
    const double margin = 40;
    double minx = 0, maxx = 0, miny = 0, maxy = 0;
    for (std::size_t i = 0; i < scene.nodes.size(); ++i) {
        const auto& n = scene.nodes[i];
        if (i == 0) minx = maxx = n.x, miny = maxy = n.y;
        minx = std::min(minx, n.x - n.radius);
        maxx = std::max(maxx, n.x + n.radius);
        miny = std::min(miny, n.y - n.radius);
        maxy = std::max(maxy, n.y + n.radius);
    }
    const double bw = std::max(maxx - minx, 1e-9), bh = std::max(maxy - miny, 1e-9);
    const double s = std::min((opts.width - 2 * margin) / bw, (opts.height - 2 * margin) / bh);
    const double ox = margin + ((opts.width - 2 * margin) - bw * s) / 2;
    const double oy = margin + ((opts.height - 2 * margin) - bh * s) / 2;
    auto X = [&](double x) { return ox + (x - minx) * s; };
    auto Y = [&](double y) { return opts.height - oy - (y - miny) * s; };

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + num(opts.width) + "\" height=\"" +
           num(opts.height) + "\" viewBox=\"0 0 " + num(opts.width) + " " + num(opts.height) + "\">\n";
    out +=
        "<style>\n"
        ".plain,.nominal,.cycle{stroke:#333;stroke-width:1.5;fill:none}\n"
        ".contranominal{stroke:#1f5f99;stroke-width:1.5;fill:none}\n"
        ".overlap{stroke:none;fill:none}\n"
        "polygon.contranominal{fill:#1f5f99;fill-opacity:0.18}\n"
        "polygon.hull{fill:#c07a00;fill-opacity:0.12;stroke:#c07a00;stroke-opacity:0.12;stroke-linejoin:round}\n"
        ".concept,.attribute{fill:#fff;stroke:#333;stroke-width:1.5}\n"
        ".ordinal{fill:#e8e8e8;fill-opacity:0.7;stroke:#333;stroke-width:1.5}\n"
        ".tulip{fill:#fde9c9}\n"
        "text{font-family:sans-serif;font-size:11px;text-anchor:middle}\n"
        "</style>\n";

    out += "<g class=\"polygons\">\n";
    for (const auto& p : scene.polygons) {
        std::string pts;
        double sx = 0, top = -1e300, bottom = 1e300;
        for (auto v : p.nodes) {
            const auto& n = scene.nodes[v];
            pts += (pts.empty() ? "" : " ") + num(X(n.x)) + "," + num(Y(n.y));
            sx += X(n.x);
            top = std::max(top, n.y + n.radius);
            bottom = std::min(bottom, n.y - n.radius);
        }
        out += "<polygon class=\"" + p.style + "\" points=\"" + pts + "\"";
        if (p.style == "hull") out += " style=\"stroke-width:" + num(std::max(24.0, 0.6 * s)) + "\"";
        out += "/>\n";
        const double cx = p.nodes.empty() ? 0 : sx / static_cast<double>(p.nodes.size());
        if (!p.label_above.empty())
            out += "<text x=\"" + num(cx) + "\" y=\"" + num(Y(top) - 18) + "\">" + xml_escape(p.label_above) + "</text>\n";
        if (!p.label_below.empty())
            out += "<text x=\"" + num(cx) + "\" y=\"" + num(Y(bottom) + 26) + "\">" + xml_escape(p.label_below) +
                   "</text>\n";
    }
    out += "</g>\n<g class=\"edges\">\n";
    for (const auto& e : scene.edges) {
        const auto &a = scene.nodes[e.from], &b = scene.nodes[e.to];
        out += "<line class=\"" + e.style + "\" x1=\"" + num(X(a.x)) + "\" y1=\"" + num(Y(a.y)) + "\" x2=\"" +
               num(X(b.x)) + "\" y2=\"" + num(Y(b.y)) + "\"/>\n";
        if (!e.label.empty())
            out += "<text x=\"" + num((X(a.x) + X(b.x)) / 2) + "\" y=\"" + num((Y(a.y) + Y(b.y)) / 2 - 3) + "\">" +
                   xml_escape(e.label) + "</text>\n";
    }
    out += "</g>\n<g class=\"nodes\">\n";
    // larger circles first so overlapping ordinal nodes stay visible
    std::vector<std::size_t> order(scene.nodes.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return scene.nodes[a].radius > scene.nodes[b].radius; });
    for (auto i : order) {
        const auto& n = scene.nodes[i];
        std::string cls = n.style + (n.group.empty() ? "" : " " + n.group);
        out += "<circle id=\"" + xml_escape(n.id) + "\" class=\"" + cls + "\" cx=\"" + num(X(n.x)) + "\" cy=\"" +
               num(Y(n.y)) + "\" r=\"" + num(std::max(4.0, n.radius * s)) + "\"/>\n";
    }
    out += "</g>\n<g class=\"labels\">\n";
    for (const auto& n : scene.nodes) {
        const double r = std::max(4.0, n.radius * s);
        if (!n.label.empty())
            out += "<text x=\"" + num(X(n.x)) + "\" y=\"" + num(Y(n.y) + 4) + "\">" + xml_escape(n.label) + "</text>\n";
        if (!n.label_above.empty())
            out += "<text x=\"" + num(X(n.x)) + "\" y=\"" + num(Y(n.y) - r - 4) + "\">" + xml_escape(n.label_above) +
                   "</text>\n";
        if (!n.label_below.empty())
            out += "<text x=\"" + num(X(n.x)) + "\" y=\"" + num(Y(n.y) + r + 12) + "\">" +
                   xml_escape(n.label_below) + "</text>\n";
    }
    out += "</g>\n</svg>\n";
    return out;
}

std::string emit_dot(const Scene& scene) {
    std::string out = "digraph hasse {\n  rankdir=BT;\n  node [shape=circle, width=0.2, label=\"\"];\n";
    for (const auto& n : scene.nodes) {
        out += "  \"" + dot_escape(n.id) + "\" [pos=\"" + num(n.x) + "," + num(n.y) + "!\"";
        std::vector<std::string> xl;
        if (!n.label_above.empty()) xl.push_back(dot_escape(n.label_above));
        if (!n.label_below.empty()) xl.push_back(dot_escape(n.label_below));
        if (!xl.empty()) out += ", xlabel=\"" + join(xl, "\\n") + "\"";
        out += "];\n";
    }
    for (const auto& e : scene.edges)
        out += "  \"" + dot_escape(scene.nodes[e.from].id) + "\" -> \"" + dot_escape(scene.nodes[e.to].id) + "\";\n";
    out += "}\n";
    return out;
}

}  // namespace lattica
