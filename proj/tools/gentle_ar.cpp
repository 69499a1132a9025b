#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "gentle/ar.hpp"
#include "gentle/classifier.hpp"
#include "gentle/complex.hpp"
#include "gentle/io.hpp"
#include "gentle/walks.hpp"

using namespace gentle;

namespace {

struct Options {
    std::string params;
    std::string spec;
    std::string format = "text";
    int m = 0;
    std::string string_arg;
    bool ending = false;
    bool inverse = false;
    int k = 1;
    std::string vertex;
    std::string kind;
    int steps = 1;
    bool band = false;
    std::string lambda = "1";
    std::string component;
    int rows = 3;
    int cols = 11;
    bool dot = false;
    int max_len = 6;
    int family = 4;
    bool effective = false;
    int threads = 0;
    int max_lines = 50;
};

Quiver load_quiver(const Options& o) {
    if (!o.params.empty() && !o.spec.empty()) fail(ErrorKind::SyntaxError, "give either --params or --spec, not both");
    if (!o.spec.empty()) return build_quiver(read_quiver_spec(o.spec));
    if (o.params.empty()) fail(ErrorKind::SyntaxError, "a quiver is required: --params r1,r2,s1,s2 or --spec <file>");
    return build_quiver(QuiverSpec{parse_parameters(o.params), {}});
}

void require_string(const HString& w) {
    if (w.is_empty()) fail(ErrorKind::EmptyString, "this command needs a non-empty string");
}

int run(const std::string& cmd, const Options& o) {
    const Format fmt = parse_format(o.format);
    const Walks w(load_quiver(o));
    const Quiver& q = w.quiver();
    const bool structured = fmt == Format::Structured;

    if (cmd == "quiver") {
        std::cout << (structured ? structured_quiver(q) : quiver_table(q));
    } else if (cmd == "parse") {
        const HString s = parse(q, o.string_arg);
        std::cout << (structured ? structured_string(q, s) : render(q, s) + "\n");
    } else if (cmd == "complex") {
        const StringComplex x = build_string_complex(q, o.m, parse(q, o.string_arg));
        if (structured)
            std::cout << structured_complex(q, x);
        else
            std::cout << render(q, x) << "\nd^2 = 0: " << (verify_d_squared(q, x) ? "yes" : "no") << "\n";
    } else if (cmd == "triangle") {
        const HString s = parse(q, o.string_arg);
        const ARTriangle t = o.ending ? ar_triangle_ending(w, o.m, s) : ar_triangle_starting(w, o.m, s);
        std::cout << (structured ? structured_triangle(q, t) : render_triangle(q, t));
    } else if (cmd == "tau") {
        if (o.k < 0) fail(ErrorKind::IndexOutOfRange, "-k must be non-negative");
        Shifted cur{o.m, parse(q, o.string_arg)};
        require_string(cur.string);
        std::vector<Shifted> iterates{cur};
        for (int i = 0; i < o.k; ++i) {
            cur = o.inverse ? tau_inverse(w, cur.degree, cur.string) : tau(w, cur.degree, cur.string);
            iterates.push_back(cur);
        }
        std::cout << (structured ? structured_shifted(q, iterates) : render(q, cur) + "\n");
    } else if (cmd == "walk") {
        const auto v = q.find_vertex(o.vertex);
        if (!v) fail(ErrorKind::UnknownEntity, "no vertex '" + o.vertex + "'");
        const auto steps = w.walk(*v, parse_walk_kind(o.kind), o.steps);
        if (structured) {
            std::vector<Shifted> xs;
            for (const HString& s : steps) xs.push_back({0, s});
            std::cout << structured_shifted(q, xs);
        } else {
            for (const HString& s : steps) std::cout << render(q, s) << "\n";
        }
    } else if (cmd == "reduce") {
        const ReductionTrace t = reduce_to_base(w, parse(q, o.string_arg));
        std::cout << (structured ? structured_trace(q, t) : render_trace(q, t));
    } else if (cmd == "classify") {
        const HString s = parse(q, o.string_arg);
        const ComponentId id = o.band ? classify_band(q, o.m, s, o.lambda) : classify(w, o.m, s);
        std::cout << (structured ? structured_component(q, id) : render(q, id) + "\n");
    } else if (cmd == "census") {
        const auto fams = census(w);
        std::cout << (structured ? structured_census(q, fams) : render_census(q, fams));
    } else if (cmd == "edge") {
        const EdgeCycle e = edge(w, parse_component_id(q, o.component));
        std::cout << (structured ? structured_edge(q, e) : render_edge(q, e));
    } else if (cmd == "fragment") {
        const HString s = parse(q, o.string_arg);
        const Fragment f = fragment(w, o.m, s, o.rows, o.cols);
        if (o.dot || fmt == Format::Dot)
            std::cout << render_dot(q, f);
        else if (structured)
            std::cout << structured_fragment(q, f);
        else {
            std::cout << render(q, f);
            for (const std::string& v : f.violations) std::cout << "violation: " << v << "\n";
        }
        if (!f.valid()) fail(ErrorKind::InvariantBreach, "fragment contains meshes that are not AR-triangles");
    } else if (cmd == "bands") {
        const auto bands = enumerate_bands(q, o.max_len);
        if (structured) {
            std::cout << structured_bands(q, bands);
        } else {
            const HString c = central_band(q);
            std::cout << "central band: " << render(q, c) << (is_band(q, c) ? "" : "  (INVALID)") << "\n";
            const HString base = band_family_base(q);
            for (int n = 0; n <= o.family; ++n) {
                const HString b = band_family(q, base, n);
                std::cout << "family n=" << n << ": length " << b.length() << (is_band(q, b) ? ", valid" : ", INVALID")
                          << "\n";
            }
            std::cout << bands.size() << " bands of length <= " << o.max_len << "\n";
            for (const HString& b : bands) std::cout << "  " << render(q, b) << "\n";
        }
    } else if (cmd == "crosscheck") {
        const CrosscheckReport r = crosscheck(w, o.max_len, o.effective, o.threads);
        std::cout << (structured ? structured_crosscheck(r) : render_crosscheck(r, o.max_lines));
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Homotopy strings, AR-triangles and AR-components for cluster-tilted algebras of type A~"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--params", o.params, "quiver parameters r1,r2,s1,s2");
    app.add_option("--spec", o.spec, "quiver spec file");
    app.add_option("--format", o.format, "text, structured or dot");

    auto string_cmd = [&](const char* name, const char* help) {
        CLI::App* c = app.add_subcommand(name, help);
        c->add_option("string", o.string_arg, "homotopy string")->required();
        return c;
    };
    app.add_subcommand("quiver", "print vertices, arrows, S/T and relations");
    string_cmd("parse", "parse and echo a homotopy string");
    string_cmd("complex", "print the string complex X_{m,w}")->add_option("-m", o.m, "base degree");
    {
        CLI::App* c = string_cmd("triangle", "AR-triangle starting (or ending) in w[m]");
        c->add_option("-m", o.m, "degree");
        c->add_flag("--ending", o.ending, "triangle ending in w[m]");
    }
    {
        CLI::App* c = string_cmd("tau", "iterate the AR-translate");
        c->add_option("-m", o.m, "degree");
        c->add_option("-k", o.k, "number of iterations");
        c->add_flag("--inverse", o.inverse, "iterate tau^-1");
    }
    {
        CLI::App* c = app.add_subcommand("walk", "steps of a Q-walk");
        c->add_option("vertex", o.vertex, "start vertex")->required();
        c->add_option("kind", o.kind, "cw_r, ccw_r, cw_s or ccw_s")->required();
        c->add_option("-n", o.steps, "number of steps");
    }
    string_cmd("reduce", "admissible reductions down to a base string");
    {
        CLI::App* c = string_cmd("classify", "AR-component of w[m]");
        c->add_option("-m", o.m, "degree");
        c->add_flag("--band", o.band, "treat the string as a homotopy band");
        c->add_option("--lambda", o.lambda, "eigenvalue label for bands");
    }
    app.add_subcommand("census", "component census of the quiver");
    app.add_subcommand("edge", "one period of a component edge")
        ->add_option("component", o.component, "component id such as R(0)")
        ->required();
    {
        CLI::App* c = string_cmd("fragment", "mesh patch of the component of w[m]");
        c->add_option("-m", o.m, "degree");
        c->add_option("--rows", o.rows, "rows");
        c->add_option("--cols", o.cols, "columns");
        c->add_flag("--dot", o.dot, "emit DOT");
    }
    {
        CLI::App* c = app.add_subcommand("bands", "central band, band families and enumerated bands");
        c->add_option("--max-len", o.max_len, "length bound");
        c->add_option("--family", o.family, "largest family index n");
    }
    {
        CLI::App* c = app.add_subcommand("crosscheck", "omega^+ tables against the direct algorithm");
        c->add_option("--max-len", o.max_len, "length bound");
        c->add_flag("--effective", o.effective, "compare the tables with errata applied");
        c->add_option("--threads", o.threads, "worker threads (0 = hardware)");
        c->add_option("--max-lines", o.max_lines, "report lines shown in text format");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    const std::string cmd = app.get_subcommands().front()->get_name();
    try {
        return run(cmd, o);
    } catch (const Error& e) {
        if (o.format == "structured")
            std::cout << structured_error(e);
        else
            std::cerr << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
        return e.exit_code();
    } catch (const std::exception& e) {
        std::cerr << "error: InvariantBreach: " << e.what() << "\n";
        return 4;
    }
}
