// Command-line front end: demo corpora, induction, DL reports, language
// listing and semantic analysis.
//
// Exit codes: 0 success, 1 validation / coverage / shape failure,
// 2 I/O or parse failure.

#include <mdlg/corpus_io.hpp>
#include <mdlg/demo.hpp>
#include <mdlg/dl.hpp>
#include <mdlg/generator.hpp>
#include <mdlg/induction.hpp>
#include <mdlg/semantics.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace mdlg;

namespace {

// A path to an existing file, or the name of a built-in corpus.
Corpus load_corpus(const std::string& source)
{
    if (std::filesystem::is_regular_file(source)) return parse_corpus(read_file(source));
    const auto names = demo::corpus_names();
    if (std::find(names.begin(), names.end(), source) != names.end()) return demo::corpus(source);
    throw IoError("no corpus file or built-in corpus named '" + source + "'");
}

Grammar load_grammar(const std::string& source)
{
    if (std::filesystem::is_regular_file(source)) return parse_grammar(read_file(source));
    if (auto g = demo::grammar(source)) return *g;
    throw IoError("no grammar file or built-in grammar named '" + source + "'");
}

void emit(const std::string& out_path, const std::string& text)
{
    if (out_path.empty()) {
        std::cout << text;
    } else {
        write_file(out_path, text);
    }
}

std::string render_semantics(const Semantics& s, const Corpus& corpus, const IdiomReport& idioms,
                             std::size_t form_width)
{
    std::ostringstream out;
    out << "# mu\n";
    for (const Tuple& row : s.mu.table()) out << to_string(row) << '\n';

    out << "# oplus\n";
    for (const OplusRule& r : s.oplus.rules) {
        out << "[" << r.left.text() << "," << r.right.text() << "] "
            << to_string(meaning_tuple(r.result.apply(Symbol("$1"), Symbol("$2")))) << '\n';
    }
    out << (s.oplus.overrides ? "# overrides\n" : "# exclusions\n");
    for (const SpecificPair& p : s.oplus.exclusions)
        out << "[" << p.left.text() << "," << p.right.text() << "] " << to_string(meaning_tuple(p.meaning)) << '\n';

    const auto rep = check_compositional(s.mu, s.oplus, corpus, form_width);
    out << "# compositionality\n"
        << "corpus_sentences " << rep.corpus_sentences << '\n'
        << "domain_sentences " << rep.domain_sentences << '\n'
        << "coverage " << std::fixed << std::setprecision(6) << rep.coverage() << '\n'
        << "violations " << rep.violations.size() << '\n';
    for (const Sentence& v : rep.violations) out << "violation " << to_string(v) << '\n';

    out << "# idioms\n";
    for (std::size_t i = 0; i < idioms.sentences.size(); ++i)
        out << "sentence " << to_string(idioms.sentences[i]) << "\t" << idioms.justification[i] << '\n';
    for (Symbol w : idioms.items) out << "item " << w.text() << '\n';

    const auto score = compositionality_score(s.mu, s.oplus);
    out << "# score\n"
        << "domain " << score.domain << '\n'
        << "encoding " << score.encoding << '\n';

    out << "# lambda\n";
    try {
        const auto lam = lambda_encoding_report(s.mu, s.oplus);
        for (const std::string& d : lam.definitions) out << d << '\n';
        out << "definition_size " << lam.definition_size << '\n'
            << "domain_size " << lam.domain_size << '\n'
            << "interpreter_size size(interpreter)\n";
    } catch (const ShapeError& e) {
        out << "unavailable: " << e.what() << '\n';
    }
    return out.str();
}

int run(int argc, char** argv)
{
    CLI::App app{"Minimum description length grammar induction"};
    app.require_subcommand(1);

    std::string name, corpus_spec, grammar_spec, variant = "very-greedy", trace_path, out_path, categories;
    std::size_t penalty = default_penalty;
    std::size_t limit = default_enumeration_limit;
    std::size_t form_width = 2;
    bool serial = false;

    auto* demo_cmd = app.add_subcommand("demo", "Write a built-in corpus");
    demo_cmd->add_option("--name", name, "Corpus name (xyz1, xyz2, kick-bucket)")->required();
    demo_cmd->add_option("--out", out_path, "Output file (default: stdout)");

    auto* induce_cmd = app.add_subcommand("induce", "Induce a grammar from a corpus");
    induce_cmd->add_option("--corpus", corpus_spec, "Corpus file or built-in name")->required();
    induce_cmd->add_option("--variant", variant, "very-greedy, partial or overgen")
        ->check(CLI::IsMember({"very-greedy", "partial", "overgen"}));
    induce_cmd->add_option("--penalty", penalty, "Cost per overgenerated sentence");
    induce_cmd->add_option("--limit", limit, "Enumeration bound per rule");
    induce_cmd->add_option("--trace", trace_path, "Write the operation trace here");
    induce_cmd->add_option("--out", out_path, "Output grammar file (default: stdout)");
    induce_cmd->add_flag("--serial", serial, "Evaluate candidates on one thread");

    auto* dl_cmd = app.add_subcommand("dl", "Report description lengths");
    dl_cmd->add_option("--grammar", grammar_spec, "Grammar file or built-in name")->required();
    dl_cmd->add_option("--corpus", corpus_spec, "Corpus file or built-in name");
    dl_cmd->add_option("--penalty", penalty, "Cost per overgenerated sentence");
    dl_cmd->add_option("--limit", limit, "Enumeration bound");

    auto* gen_cmd = app.add_subcommand("generate", "List the language of a grammar");
    gen_cmd->add_option("--grammar", grammar_spec, "Grammar file or built-in name")->required();
    gen_cmd->add_option("--limit", limit, "Enumeration bound");
    gen_cmd->add_option("--out", out_path, "Output file (default: stdout)");

    auto* an_cmd = app.add_subcommand("analyze", "Extract compositional semantics and idioms");
    an_cmd->add_option("--grammar", grammar_spec, "Grammar file or built-in name")->required();
    an_cmd->add_option("--corpus", corpus_spec, "Corpus file or built-in name")->required();
    an_cmd->add_option("--form-width", form_width, "Number of form words per sentence");
    an_cmd->add_option("--categories", categories, "Category names of the form positions, comma separated");
    an_cmd->add_option("--out", out_path, "Output file (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (*demo_cmd) {
            emit(out_path, serialize_corpus(demo::corpus(name)));
        } else if (*induce_cmd) {
            InductionConfig cfg;
            cfg.variant = parse_variant(variant);
            cfg.penalty = penalty;
            cfg.limit = limit;
            cfg.kernel = serial ? Kernel::serial : Kernel::parallel;
            const InductionResult r = induce(load_corpus(corpus_spec), cfg);
            std::string text = serialize_grammar(r.grammar);
            text += "# grammar_dl " + std::to_string(r.report.grammar_dl) + " overgen " +
                    std::to_string(r.report.overgen_count) + "\n";
            text += "# dl " + std::to_string(r.report.total) + "\n";
            emit(out_path, text);
            if (!trace_path.empty()) write_file(trace_path, serialize_trace(r.trace));
        } else if (*dl_cmd) {
            const Grammar g = load_grammar(grammar_spec);
            if (corpus_spec.empty()) {
                std::cout << "grammar_dl " << grammar_dl(g) << '\n';
            } else {
                const DLReport rep = total_dl(g, load_corpus(corpus_spec), penalty, limit);
                std::cout << "grammar_dl " << rep.grammar_dl << '\n'
                          << "overgen " << rep.overgen_count << '\n'
                          << "penalty " << rep.penalty << '\n'
                          << "total " << rep.total << '\n';
            }
        } else if (*gen_cmd) {
            std::string text;
            for (const Sentence& s : enumerate_language(load_grammar(grammar_spec), limit)) text += to_string(s) + '\n';
            emit(out_path, text);
        } else if (*an_cmd) {
            SemanticsOptions opts;
            if (!categories.empty()) {
                const auto comma = categories.find(',');
                if (comma == std::string::npos) throw ParseError("--categories needs two comma-separated names", 1);
                opts.categories = {categories.substr(0, comma), categories.substr(comma + 1)};
            }
            const Grammar g = load_grammar(grammar_spec);
            const Corpus c = load_corpus(corpus_spec);
            const Semantics s = extract_semantics(g, form_width, opts);
            const Semantics max = maximal_extension(s.mu, s.oplus, c, form_width);
            emit(out_path, render_semantics(max, c, idiom_items(g, c, form_width, opts), form_width));
        }
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const ValidationError& e) {
        std::cerr << "invalid grammar: " << e.what() << '\n';
        for (const auto& d : e.diagnostics()) std::cerr << "  " << d << '\n';
        return 1;
    } catch (const CoverageError& e) {
        std::cerr << "coverage failure: " << e.what() << '\n';
        const auto& missing = e.missing();
        for (std::size_t i = 0; i < missing.size() && i < 10; ++i) std::cerr << "  missing: " << missing[i] << '\n';
        if (missing.size() > 10) std::cerr << "  ... and " << missing.size() - 10 << " more\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) { return run(argc, argv); }
