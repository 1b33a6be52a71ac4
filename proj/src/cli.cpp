#include "superindex/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <ostream>

#include "superindex/characters.hpp"
#include "superindex/errors.hpp"
#include "superindex/index.hpp"
#include "superindex/repring.hpp"
#include "superindex/rootdata.hpp"

namespace superindex {
namespace {

using json = nlohmann::ordered_json;

json json_int(const Int& v) {
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
        return json(v.convert_to<long long>());
    return json(v.str());
}

json classes_json(const VirtualModule::CoeffMap& coeffs) {
    json arr = json::array();
    for (const auto& [w, c] : coeffs) {
        json entry;
        entry["weight"] = w.str();
        entry["coeff_even"] = json_int(c.even);
        entry["coeff_odd"] = json_int(c.odd);
        arr.push_back(std::move(entry));
    }
    return arr;
}

json index_report_json(const IndexReport& rep) {
    json doc;
    json chi = json::array();
    for (const auto& cls : rep.support) {
        json entry;
        entry["weight"] = cls.weight.str();
        entry["coeff_even"] = json_int(cls.coeff.even);
        entry["coeff_odd"] = json_int(cls.coeff.odd);
        entry["atypical"] = cls.atypical;
        chi.push_back(std::move(entry));
    }
    doc["chi"] = std::move(chi);
    doc["index"] = json_int(rep.super_index);
    doc["boxes"] = json::array({rep.box_bound, rep.box_bound_next});
    doc["stable"] = rep.stable;
    return doc;
}

struct Options {
    std::string group;
    std::string weight;
    std::string weight2;
    std::string levi;
    std::string symbol;
    std::string module;
    int box = 3;
    int box_h = 3;
    int box_g = 3;
    bool as_json = false;
};

int dispatch(const std::string& cmd, const Options& opt, std::ostream& out) {
    GroupSpec g = GroupSpec::parse(opt.group);

    if (cmd == "char") {
        Weight w = Weight::parse(opt.weight, g);
        LaurentPoly ch = irr_char(g, w);
        if (opt.as_json) {
            json doc;
            doc["group"] = g.str();
            doc["weight"] = w.str();
            doc["char"] = ch.str();
            out << doc.dump() << "\n";
        } else {
            out << ch.str() << "\n";
        }
        return 0;
    }

    if (cmd == "dims") {
        Weight w = Weight::parse(opt.weight, g);
        EpsInt d = irr_char(g, w).specialize();
        if (opt.as_json) {
            json doc;
            doc["group"] = g.str();
            doc["weight"] = w.str();
            doc["dims_even"] = json_int(d.even);
            doc["dims_odd"] = json_int(d.odd);
            doc["sdim"] = json_int(d.at_minus());
            out << doc.dump() << "\n";
        } else {
            out << "dim = " << d.str() << ", sdim = " << d.at_minus().str() << "\n";
        }
        return 0;
    }

    if (cmd == "typical") {
        if (!g.single()) fail("ParseError", "typical expects a single gl(p|q) block");
        Weight w = Weight::parse(opt.weight, g);
        if (!w.dominant()) fail("NotDominant", "weight " + w.str() + " is not dominant");
        auto roots = atypical_roots(g.block(0), w.block(0));
        if (opt.as_json) {
            json doc;
            doc["group"] = g.str();
            doc["weight"] = w.str();
            doc["typical"] = roots.empty();
            json arr = json::array();
            for (auto [i, j] : roots) arr.push_back(json::array({i, j}));
            doc["atypical_roots"] = std::move(arr);
            out << doc.dump() << "\n";
        } else if (roots.empty()) {
            out << "typical\n";
        } else {
            std::string s = "atypical at ";
            for (size_t k = 0; k < roots.size(); ++k) {
                if (k) s += ", ";
                s += "(" + std::to_string(roots[k].first) + "," +
                     std::to_string(roots[k].second) + ")";
            }
            out << s << "\n";
        }
        return 0;
    }

    if (cmd == "tensor") {
        Weight w1 = Weight::parse(opt.weight, g);
        Weight w2 = Weight::parse(opt.weight2, g);
        VirtualModule t = tensor(VirtualModule::basis(g, w1), VirtualModule::basis(g, w2));
        if (opt.as_json) {
            json doc;
            doc["group"] = g.str();
            doc["result"] = classes_json(t.coeffs());
            out << doc.dump() << "\n";
        } else {
            out << t.str() << "\n";
        }
        return 0;
    }

    LeviEmbedding e = LeviEmbedding::parse(g, opt.levi);

    if (cmd == "restrict") {
        Weight w = Weight::parse(opt.weight, g);
        VirtualModule r = restrict_to(VirtualModule::basis(g, w), e);
        if (opt.as_json) {
            json doc;
            doc["group"] = e.levi().str();
            doc["result"] = classes_json(r.coeffs());
            out << doc.dump() << "\n";
        } else {
            out << r.str() << "\n";
        }
        return 0;
    }

    if (cmd == "induce") {
        VirtualModule a = VirtualModule::parse(opt.symbol, e.levi());
        FormalSeries fs = induce(a, e, TruncationBox(opt.box));
        if (opt.as_json) {
            json doc;
            doc["group"] = g.str();
            doc["box"] = fs.box.bound;
            doc["series"] = classes_json(fs.coeffs);
            out << doc.dump() << "\n";
        } else {
            out << fs.str() << "\n";
        }
        return 0;
    }

    if (cmd == "index") {
        VirtualModule a = VirtualModule::parse(opt.symbol, e.levi());
        Symbol s(e, a);
        IndexReport rep = numeric_index(s, TruncationBox(opt.box));
        if (opt.as_json) {
            out << index_report_json(rep).dump() << "\n";
        } else {
            out << "index = " << rep.super_index.str() << " (stable, boxes " << rep.box_bound
                << "/" << rep.box_bound_next << ")\n"
                << "chi = " << rep.chi.str() << "\n";
        }
        return 0;
    }

    if (cmd == "bott-verify") {
        Weight w = Weight::parse(opt.weight, g);
        bool ok = bott_verify(w, e, TruncationBox(opt.box));
        if (opt.as_json) {
            json doc;
            doc["group"] = g.str();
            doc["weight"] = w.str();
            doc["box"] = opt.box;
            doc["verified"] = ok;
            out << doc.dump() << "\n";
        } else {
            out << (ok ? "true" : "false") << "\n";
        }
        return 0;
    }

    if (cmd == "find-symbol") {
        VirtualModule m = VirtualModule::parse(opt.module, g);
        Symbol s = find_symbol_for_module(m, e, TruncationBox(opt.box_h), TruncationBox(opt.box_g));
        if (opt.as_json) {
            json doc;
            doc["group"] = e.levi().str();
            doc["symbol"] = classes_json(s.cls.coeffs());
            out << doc.dump() << "\n";
        } else {
            out << s.cls.str() << "\n";
        }
        return 0;
    }

    if (cmd == "report") {
        AtypicalReport rep = atypical_report(e, TruncationBox(opt.box_h), TruncationBox(opt.box_g));
        if (opt.as_json) {
            json doc;
            doc["group"] = g.str();
            doc["levi"] = e.levi().str();
            doc["boxes"] = json::array({opt.box_h, opt.box_g});
            json rows = json::array();
            for (const auto& row : rep.rows) {
                json r;
                r["symbol"] = row.symbol_weight.str();
                r["index"] = json_int(row.super_index);
                r["stable"] = row.stable;
                json support = json::array();
                for (const auto& cls : row.support) {
                    json entry;
                    entry["weight"] = cls.weight.str();
                    entry["coeff_even"] = json_int(cls.coeff.even);
                    entry["coeff_odd"] = json_int(cls.coeff.odd);
                    entry["atypical"] = cls.atypical;
                    support.push_back(std::move(entry));
                }
                r["chi"] = std::move(support);
                rows.push_back(std::move(r));
            }
            doc["rows"] = std::move(rows);
            out << doc.dump() << "\n";
        } else {
            for (const auto& row : rep.rows) {
                out << "[" << row.symbol_weight.str() << "]  index=" << row.super_index.str()
                    << (row.stable ? "" : "  UNSTABLE") << "  chi=";
                if (row.support.empty()) {
                    out << "0";
                } else {
                    for (size_t k = 0; k < row.support.size(); ++k) {
                        const auto& cls = row.support[k];
                        if (k) out << " + ";
                        out << "(" << cls.coeff.str() << ")*[" << cls.weight.str() << "]"
                            << (cls.atypical ? "!" : "");
                    }
                }
                out << "\n";
            }
        }
        return 0;
    }

    fail("ParseError", "unknown command '" + cmd + "'");
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact representation-ring and equivariant index engine for U(p|q)"};
    app.require_subcommand(1);

    Options opt;
    auto add_common = [&](CLI::App* sub, bool with_weight) {
        sub->add_option("group", opt.group, "group, e.g. gl(1|1)")->required();
        if (with_weight) sub->add_option("weight", opt.weight, "dominant weight, e.g. \"1|0\"")->required();
        sub->add_flag("--json", opt.as_json, "emit JSON");
    };

    add_common(app.add_subcommand("char", "irreducible (super)character"), true);
    add_common(app.add_subcommand("dims", "Z[eps]-dimension and superdimension"), true);
    add_common(app.add_subcommand("typical", "typicality analysis"), true);
    auto* tensor_cmd = app.add_subcommand("tensor", "tensor product of two irreducibles");
    add_common(tensor_cmd, true);
    tensor_cmd->add_option("weight2", opt.weight2, "second weight")->required();

    auto* restrict_cmd = app.add_subcommand("restrict", "restriction to a Levi subgroup");
    add_common(restrict_cmd, true);
    restrict_cmd->add_option("--levi", opt.levi, "Levi blocks, e.g. gl(1|0)xgl(0|1)")->required();

    auto* induce_cmd = app.add_subcommand("induce", "formal induction of a virtual H-class");
    add_common(induce_cmd, false);
    induce_cmd->add_option("--levi", opt.levi)->required();
    induce_cmd->add_option("--symbol", opt.symbol, "virtual module literal, e.g. \"[0|0]\"")->required();
    induce_cmd->add_option("--box", opt.box, "truncation bound");

    auto* index_cmd = app.add_subcommand("index", "refined and numeric index of a symbol");
    add_common(index_cmd, false);
    index_cmd->add_option("--levi", opt.levi)->required();
    index_cmd->add_option("--symbol", opt.symbol)->required();
    index_cmd->add_option("--box", opt.box);

    auto* bott_cmd = app.add_subcommand("bott-verify", "classical Bott check for one weight");
    add_common(bott_cmd, true);
    bott_cmd->add_option("--levi", opt.levi)->required();
    bott_cmd->add_option("--box", opt.box);

    auto* find_cmd = app.add_subcommand("find-symbol", "integer-linear symbol search");
    add_common(find_cmd, false);
    find_cmd->add_option("--module", opt.module, "target virtual G-module")->required();
    find_cmd->add_option("--levi", opt.levi)->required();
    find_cmd->add_option("--box-h", opt.box_h);
    find_cmd->add_option("--box-g", opt.box_g);

    auto* report_cmd = app.add_subcommand("report", "atypical index support table");
    add_common(report_cmd, false);
    report_cmd->add_option("--levi", opt.levi)->required();
    report_cmd->add_option("--box-h", opt.box_h);
    report_cmd->add_option("--box-g", opt.box_g);

    std::vector<const char*> argv;
    argv.push_back("si");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 1;
    }

    try {
        return dispatch(app.get_subcommands().front()->get_name(), opt, out);
    } catch (const Error& e) {
        nlohmann::ordered_json diag;
        diag["error"] = e.code();
        diag["detail"] = e.what();
        err << diag.dump() << "\n";
        return e.code() == "ParseError" ? 1 : 2;
    }
}

}  // namespace superindex
