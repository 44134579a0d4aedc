#include "dexc/cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "dexc/chains.hpp"
#include "dexc/io.hpp"
#include "dexc/oracle.hpp"
#include "dexc/poincare.hpp"
#include "dexc/vec3.hpp"

namespace dexc::cli {

namespace {

using io::Json;

struct Options {
    std::string input;
    std::string output;
    std::string chain;
    std::string form;
    std::string method = "homotopy";
    std::string ring;
    std::string extents;
};

std::string one_line(std::string s) {
    for (char& c : s) {
        if (c == '\n' || c == '\r') {
            c = ' ';
        }
    }
    return s;
}

Json load(const std::string& path, const char* flag) {
    if (path.empty()) {
        throw ValidationError(std::string("missing required ") + flag + " file");
    }
    std::ifstream in(path);
    if (!in) {
        throw ValidationError("cannot read '" + path + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return io::parse(buf.str());
}

int report(std::ostream& err, int code, std::string_view category, const std::string& message) {
    err << "dexc: " << category << ": " << one_line(message) << "\n";
    return code;
}

class Command {
 public:
    Command(const Options& opts, std::ostream& out, std::ostream& err) : opts_(opts), out_(out), err_(err) {}

    void emit(const Json& j) const {
        const std::string text = j.dump(2) + "\n";
        if (opts_.output.empty() || opts_.output == "-") {
            out_ << text;
            return;
        }
        std::ofstream file(opts_.output);
        if (!file) {
            throw ValidationError("cannot write '" + opts_.output + "'");
        }
        file << text;
    }

    /// Ring of `doc`, checked against --ring when given.
    RingSpec ring_of(const Json& doc) const {
        RingSpec spec = io::peek_ring(doc);
        if (!opts_.ring.empty() && !(parse_ring_spec(opts_.ring) == spec)) {
            throw RingMismatchError("input ring " + to_string(spec) + " differs from --ring " + opts_.ring);
        }
        return spec;
    }

    template <class F>
    int with_ring(const Json& doc, F&& f) const {
        return visit_ring(ring_of(doc), std::forward<F>(f));
    }

    /// Two documents that must share one ring.
    template <class F>
    int with_shared_ring(const Json& a, const Json& b, F&& f) const {
        const RingSpec ra = ring_of(a);
        const RingSpec rb = ring_of(b);
        if (!(ra == rb)) {
            throw RingMismatchError("inputs use different rings: " + to_string(ra) + " vs " + to_string(rb));
        }
        return visit_ring(ra, std::forward<F>(f));
    }

    int derive() const {
        const Json doc = load(opts_.input, "-i");
        return with_ring(doc, [&](const auto& ring) {
            emit(io::form_to_json(exterior_derivative(io::form_from_json(doc, ring))));
            return kOk;
        });
    }

    int boundary() const {
        const Json doc = load(opts_.chain.empty() ? opts_.input : opts_.chain, "-c");
        return with_ring(doc, [&](const auto& ring) {
            emit(io::chain_to_json(dexc::boundary(io::chain_from_json(doc, ring))));
            return kOk;
        });
    }

    int pair() const {
        const Json form = load(opts_.form, "-f");
        const Json chain = load(opts_.chain, "-c");
        return with_shared_ring(form, chain, [&](const auto& ring) {
            const auto value = dexc::pair(io::form_from_json(form, ring), io::chain_from_json(chain, ring));
            Json j;
            j["value"] = ring.format(value);
            emit(j);
            return kOk;
        });
    }

    int wedge() const {
        const Json left = load(opts_.input, "-i");
        const Json right = load(opts_.form, "-f");
        return with_shared_ring(left, right, [&](const auto& ring) {
            emit(io::form_to_json(
                dexc::wedge(io::form_from_json(left, ring), io::form_from_json(right, ring))));
            return kOk;
        });
    }

    int check_closed() const {
        const Json doc = load(opts_.input, "-i");
        return with_ring(doc, [&](const auto& ring) {
            const auto form = io::form_from_json(doc, ring);
            if (form.degree() < form.dimension()) {
                (void)form.box().shrink();  // extent 1 is a domain error
            }
            const auto violation = find_closedness_violation(form);
            Json j;
            j["closed"] = !violation.has_value();
            if (violation) {
                j["violation"] = {{"component", violation->component.key()},
                                  {"point", violation->point}};
            }
            emit(j);
            if (violation) {
                return failed(NotClosedError(violation->component, violation->point).what());
            }
            return kOk;
        });
    }

    int solve() const {
        if (opts_.method != "homotopy" && opts_.method != "pathsum") {
            throw ValidationError("--method must be 'homotopy' or 'pathsum'");
        }
        if (opts_.method == "pathsum") {
            return pathsum();
        }
        const Json doc = load(opts_.input, "-i");
        return with_ring(doc, [&](const auto& ring) {
            emit(io::form_to_json(solve_potential(io::form_from_json(doc, ring)).potential));
            return kOk;
        });
    }

    int pathsum() const {
        const Json doc = load(opts_.input, "-i");
        return with_ring(doc, [&](const auto& ring) {
            emit(io::form_to_json(pathsum_scalar_potential(io::form_from_json(doc, ring))));
            return kOk;
        });
    }

    int stokes() const {
        const Json form = load(opts_.form, "-f");
        const Json chain = load(opts_.chain, "-c");
        return with_shared_ring(form, chain, [&](const auto& ring) {
            const auto report = stokes_verify(io::form_from_json(form, ring), io::chain_from_json(chain, ring));
            Json j;
            j["lhs"] = ring.format(report.lhs);
            j["rhs"] = ring.format(report.rhs);
            j["equal"] = report.equal;
            emit(j);
            return report.equal ? kOk : failed("stokes sides differ: " + j["lhs"].get<std::string>() + " vs " +
                                               j["rhs"].get<std::string>());
        });
    }

    int vec3(const std::string& verb) const {
        const Json doc = load(opts_.input, "-i");
        return with_ring(doc, [&](const auto& ring) {
            if (verb == "vec3-grad") {
                emit(io::field_to_json(grad(io::form_from_json(doc, ring))));
            } else if (verb == "vec3-curl") {
                emit(io::field_to_json(curl(io::field_from_json(doc, ring))));
            } else if (verb == "vec3-div") {
                emit(io::form_to_json(div(io::field_from_json(doc, ring))));
            } else if (verb == "vec3-scalar-potential") {
                emit(io::form_to_json(scalar_potential3(io::field_from_json(doc, ring))));
            } else {
                emit(io::field_to_json(vector_potential3(io::field_from_json(doc, ring))));
            }
            return kOk;
        });
    }

    int verify() const {
        if (!opts_.ring.empty() && parse_ring_spec(opts_.ring).kind != RingKind::rational) {
            throw RingMismatchError("verify runs over the rational ring only");
        }
        std::vector<int> extents;
        std::stringstream ss(opts_.extents);
        for (std::string part; std::getline(ss, part, ',');) {
            try {
                std::size_t used = 0;
                extents.push_back(std::stoi(part, &used));
                if (used != part.size()) {
                    throw std::invalid_argument(part);
                }
            } catch (const std::exception&) {
                throw ValidationError("--extents must be comma-separated integers");
            }
        }
        const Box box(std::move(extents));
        const Box inner = box.shrink();

        bool all_pass = true;
        Json degrees = Json::array();
        for (int q = 0; q <= box.dimension(); ++q) {
            const auto report = oracle::certify_exactness(box, q);
            Json entry;
            entry["degree"] = q;
            entry["kernel_dim"] = report.kernel_dim;
            entry["restricted_kernel_dim"] = report.restricted_kernel_dim;
            entry["image_dim"] = report.image_dim;
            entry["exact"] = report.exact();
            bool solved = true;
            if (q >= 1) {
                for (const auto& omega : oracle::closed_form_basis(box, q)) {
                    const auto xi = solve_potential(omega).potential;
                    if (!(exterior_derivative(xi) == restrict_to(omega, inner))) {
                        solved = false;
                        break;
                    }
                }
                entry["solver_covers_kernel"] = solved;
            }
            all_pass = all_pass && report.exact() && solved;
            degrees.push_back(std::move(entry));
        }
        Json j;
        j["extents"] = box.extents();
        j["degrees"] = std::move(degrees);
        j["pass"] = all_pass;
        emit(j);
        return all_pass ? kOk : failed("exactness suite failed on " + to_string(box));
    }

 private:
    ExitCode failed(const std::string& why) const {
        report(err_, kPropertyFailed, "property-failed", why);
        return kPropertyFailed;
    }

    const Options& opts_;
    std::ostream& out_;
    std::ostream& err_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options opts;
    CLI::App app{"Discrete exterior calculus on lattice boxes", "dexc"};
    app.require_subcommand(1);

    auto add_io = [&](CLI::App* sub) {
        sub->add_option("-i,--input", opts.input, "input document");
        sub->add_option("-o,--output", opts.output, "output file (default stdout)");
        sub->add_option("-c,--chain", opts.chain, "chain document");
        sub->add_option("-f,--form", opts.form, "form document");
        sub->add_option("--ring", opts.ring, "expected ring, e.g. rational or modular:7");
        return sub;
    };

    const std::vector<std::pair<std::string, std::string>> verbs = {
        {"derive", "exterior derivative of a form (-i)"},
        {"boundary", "boundary of a chain (-c or -i)"},
        {"pair", "pair a form (-f) with a chain (-c)"},
        {"wedge", "wedge product of -i and -f"},
        {"check-closed", "exit 0 iff D of the form (-i) vanishes"},
        {"solve", "potential of a closed form (-i)"},
        {"pathsum", "path-sum scalar potential of a closed 1-form (-i)"},
        {"stokes", "compare B(D form, chain) with B(form, boundary chain)"},
        {"vec3-grad", "gradient of a 3-d scalar grid"},
        {"vec3-curl", "curl of a vecfield3"},
        {"vec3-div", "divergence of a vecfield3"},
        {"vec3-scalar-potential", "b with grad b = a"},
        {"vec3-vector-potential", "b with curl b = a"},
        {"verify", "oracle exactness suite on a box (--extents)"},
    };
    std::vector<CLI::App*> subs;
    for (const auto& [name, help] : verbs) {
        CLI::App* sub = add_io(app.add_subcommand(name, help));
        if (name == "solve") {
            sub->add_option("--method", opts.method, "homotopy (default) or pathsum");
        }
        if (name == "verify") {
            sub->add_option("--extents", opts.extents, "box extents, e.g. 3,3,3")->required();
        }
        subs.push_back(sub);
    }

    std::vector<const char*> argv{"dexc"};
    for (const std::string& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        return report(err, kMalformedInput, "malformed-input", e.what());
    }

    std::string verb;
    for (CLI::App* sub : subs) {
        if (sub->parsed()) {
            verb = sub->get_name();
        }
    }

    const Command cmd(opts, out, err);
    try {
        if (verb == "derive") return cmd.derive();
        if (verb == "boundary") return cmd.boundary();
        if (verb == "pair") return cmd.pair();
        if (verb == "wedge") return cmd.wedge();
        if (verb == "check-closed") return cmd.check_closed();
        if (verb == "solve") return cmd.solve();
        if (verb == "pathsum") return cmd.pathsum();
        if (verb == "stokes") return cmd.stokes();
        if (verb == "verify") return cmd.verify();
        return cmd.vec3(verb);
    } catch (const NotClosedError& e) {
        return report(err, kPropertyFailed, "not-closed", e.what());
    } catch (const DegreeError& e) {
        return report(err, kDomainError, "degree-error", e.what());
    } catch (const EmptyDomainError& e) {
        return report(err, kDomainError, "empty-domain", e.what());
    } catch (const OutOfDomainError& e) {
        return report(err, kDomainError, "out-of-domain", e.what());
    } catch (const ResourceError& e) {
        return report(err, kDomainError, "resource-limit", e.what());
    } catch (const RingMismatchError& e) {
        return report(err, kMalformedInput, "ring-mismatch", e.what());
    } catch (const Error& e) {
        return report(err, kMalformedInput, "malformed-input", e.what());
    }
}

}  // namespace dexc::cli
