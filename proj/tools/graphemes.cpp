#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "grapheme/corpus.hpp"
#include "grapheme/errors.hpp"
#include "grapheme/eval.hpp"
#include "grapheme/fuzzy.hpp"
#include "grapheme/ipa.hpp"
#include "grapheme/predictor.hpp"
#include "grapheme/segmenter.hpp"

#ifndef GRAPHEME_DEFAULT_DATA_DIR
#define GRAPHEME_DEFAULT_DATA_DIR "data"
#endif

namespace {

using namespace grapheme;

// Flags win over GRAPHEME_DATA_DIR, which wins over the compiled-in default.
std::string data_file(const std::string& flag_value, const char* name) {
    if (!flag_value.empty()) return flag_value;
    std::string dir = GRAPHEME_DEFAULT_DATA_DIR;
    if (const char* env = std::getenv("GRAPHEME_DATA_DIR")) dir = env;
    return dir + "/" + name;
}

std::string join(const std::vector<std::string>& parts, char sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i > 0) out.push_back(sep);
        out += parts[i];
    }
    return out;
}

void print_prediction(const predictor::CountPrediction& prediction) {
    std::printf("%.2f → %d\n", prediction.crisp, prediction.rounded);
}

predictor::CountPrediction predict_verbose(const fuzzy::InferenceEngine& engine,
                                           const std::string& word, bool verbose) {
    const corpus::FeatureVector features = corpus::extract_features(word);
    if (!verbose) return predictor::predict_features(engine, features);

    const std::map<std::string, double> inputs{
        {"characters", static_cast<double>(features.char_count)},
        {"vowels", static_cast<double>(features.vowel_count)},
        {"consonants", static_cast<double>(features.consonant_count)}};
    const std::vector<double> activations = engine.fire_all(inputs);
    for (std::size_t i = 0; i < activations.size(); ++i)
        std::printf("rule %s\t%.6f\n", engine.rules()[i].output_label.c_str(), activations[i]);
    const double raw = fuzzy::defuzzify_centroid(engine.aggregate(activations));
    std::printf("crisp\t%.6f\n", raw);
    return predictor::predict_features(engine, features);
}

struct Options {
    std::string corpus_path;
    std::string word;
    std::string params_path;
    std::string inventory_path;
    std::string dict_path;
    std::string phonemes_path;
    std::string table_path;
    std::string method = "fis";
    int count = 0;
    std::size_t limit = 1000;
    bool use_auto = false;
    bool all = false;
    bool verbose = false;
    bool json = false;
};

fuzzy::InferenceEngine load_engine(const Options& opt) {
    return predictor::build_fis(
        predictor::load_params_file(data_file(opt.params_path, "count_params.tsv")));
}

seg::GraphemeInventory load_inventory(const Options& opt) {
    return seg::GraphemeInventory::load_file(data_file(opt.inventory_path, "graphemes.txt"));
}

int run_stats(const Options& opt) {
    const auto corpus = corpus::parse_corpus_file(opt.corpus_path);
    std::fputs(corpus::format_stats_tsv(corpus::compute_stats(corpus)).c_str(), stdout);
    return 0;
}

int run_freq(const Options& opt) {
    const auto corpus = corpus::parse_corpus_file(opt.corpus_path);
    std::fputs(corpus::format_frequency_tsv(corpus::frequency_table(corpus)).c_str(), stdout);
    return 0;
}

int run_predict(const Options& opt) {
    const auto engine = load_engine(opt);
    print_prediction(predict_verbose(engine, opt.word, opt.verbose));
    return 0;
}

void print_segmentation(const seg::Segmentation& segmentation, int requested) {
    if (segmentation.exact_count_match) {
        std::printf("%s\n", join(segmentation.graphemes, '|').c_str());
    } else {
        std::printf("%s\t# requested %d, nearest %d\n", join(segmentation.graphemes, '|').c_str(),
                    requested, segmentation.achieved_count);
    }
}

int run_segment(const Options& opt) {
    const auto inventory = load_inventory(opt);
    if (opt.all) {
        const auto result = seg::enumerate_segmentations(opt.word, inventory, opt.limit);
        for (const seg::Segmentation& s : result.segmentations) {
            if (opt.count > 0 && s.achieved_count != opt.count) continue;
            std::printf("%s\n", join(s.graphemes, '|').c_str());
        }
        if (result.truncated) std::printf("# truncated at %zu results\n", opt.limit);
        return 0;
    }
    int target = opt.count;
    if (opt.use_auto) {
        const auto engine = load_engine(opt);
        const auto prediction = predictor::predict_count(engine, opt.word);
        print_prediction(prediction);
        target = prediction.rounded;
    }
    print_segmentation(seg::segment(opt.word, target, inventory), target);
    return 0;
}

int run_ipa_segment(const Options& opt) {
    const auto dict = ipa::PronunciationDict::load_file(data_file(opt.dict_path, "ipa_dict.tsv"));
    const auto phonemes =
        ipa::PhonemeInventory::load_file(data_file(opt.phonemes_path, "phonemes.txt"));
    const auto table =
        ipa::CorrespondenceTable::load_file(data_file(opt.table_path, "correspondences.tsv"));
    table.validate(phonemes, load_inventory(opt));

    const std::string& transcription = dict.lookup(opt.word);
    const auto parsed = ipa::parse_phonemes(transcription, phonemes);
    const auto mapped = ipa::map_to_graphemes(opt.word, parsed, table);
    std::printf("%s\n", join(mapped.graphemes, '|').c_str());
    return 0;
}

int run_eval(const Options& opt) {
    const auto corpus = corpus::parse_corpus_file(opt.corpus_path);
    const bool want_fis = opt.method == "fis" || opt.method == "both";
    const bool want_ipa = opt.method == "ipa" || opt.method == "both";

    std::vector<eval::EvalReport> reports;
    if (want_fis) {
        const auto engine = load_engine(opt);
        const auto inventory = load_inventory(opt);
        reports.push_back(eval::evaluate_fis(corpus, engine, inventory));
    }
    if (want_ipa) {
        const auto dict = ipa::PronunciationDict::load_file(data_file(opt.dict_path, "ipa_dict.tsv"));
        const auto phonemes =
            ipa::PhonemeInventory::load_file(data_file(opt.phonemes_path, "phonemes.txt"));
        const auto table =
            ipa::CorrespondenceTable::load_file(data_file(opt.table_path, "correspondences.tsv"));
        const auto inventory = load_inventory(opt);
        table.validate(phonemes, inventory);
        reports.push_back(eval::evaluate_ipa(corpus, dict, phonemes, table));
    }

    if (opt.json) {
        if (reports.size() == 1) {
            std::printf("%s\n", eval::to_json(reports.front()).dump(2).c_str());
        } else {
            nlohmann::json array = nlohmann::json::array();
            for (const auto& report : reports) array.push_back(eval::to_json(report));
            std::printf("%s\n", array.dump(2).c_str());
        }
    } else {
        for (std::size_t i = 0; i < reports.size(); ++i) {
            if (i > 0) std::printf("\n");
            std::fputs(eval::format_plain(reports[i]).c_str(), stdout);
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Grapheme-count prediction and segmentation toolkit"};
    app.require_subcommand(1);
    Options opt;

    auto add_params = [&](CLI::App* cmd) {
        cmd->add_option("--params", opt.params_path, "Count-model parameter TSV");
    };
    auto add_inventory = [&](CLI::App* cmd) {
        cmd->add_option("--inventory", opt.inventory_path, "Grapheme inventory file");
    };
    auto add_ipa_resources = [&](CLI::App* cmd) {
        cmd->add_option("--dict", opt.dict_path, "Pronunciation dictionary TSV");
        cmd->add_option("--table", opt.table_path, "Phoneme-to-grapheme correspondence TSV");
        cmd->add_option("--phonemes", opt.phonemes_path, "Phoneme inventory file");
    };

    CLI::App* stats = app.add_subcommand("stats", "Per-grapheme-count feature statistics");
    stats->add_option("corpus", opt.corpus_path, "Annotated corpus TSV")->required();

    CLI::App* freq = app.add_subcommand("freq", "Grapheme-count probabilities by word length");
    freq->add_option("corpus", opt.corpus_path, "Annotated corpus TSV")->required();

    CLI::App* predict = app.add_subcommand("predict", "Predict a word's grapheme count");
    predict->add_option("word", opt.word, "Lowercase word")->required();
    predict->add_flag("--verbose", opt.verbose, "Print rule activations and the raw crisp value");
    add_params(predict);

    CLI::App* segment = app.add_subcommand("segment", "Split a word into graphemes");
    segment->add_option("word", opt.word, "Lowercase word")->required();
    CLI::Option* count_opt =
        segment->add_option("--count", opt.count, "Target grapheme count")->check(CLI::PositiveNumber);
    CLI::Option* auto_opt =
        segment->add_flag("--auto", opt.use_auto, "Predict the count, then segment");
    CLI::Option* all_opt = segment->add_flag("--all", opt.all, "Print every segmentation");
    segment->add_option("--limit", opt.limit, "Cap for --all")->check(CLI::PositiveNumber);
    auto_opt->excludes(count_opt);
    all_opt->excludes(auto_opt);
    add_inventory(segment);
    add_params(segment);

    CLI::App* ipa_segment =
        app.add_subcommand("ipa-segment", "Segment through the IPA mapping baseline");
    ipa_segment->add_option("word", opt.word, "Lowercase word")->required();
    add_ipa_resources(ipa_segment);
    add_inventory(ipa_segment);

    CLI::App* evaluate = app.add_subcommand("eval", "Score methods against an annotated corpus");
    evaluate->add_option("corpus", opt.corpus_path, "Annotated corpus TSV")->required();
    evaluate->add_option("--method", opt.method, "fis | ipa | both")
        ->check(CLI::IsMember({"fis", "ipa", "both"}));
    evaluate->add_flag("--json", opt.json, "Emit the report as JSON");
    add_params(evaluate);
    add_inventory(evaluate);
    add_ipa_resources(evaluate);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << '\n' << app.help();
        return 2;
    }

    if (segment->parsed() && !opt.all && !opt.use_auto && opt.count == 0) {
        std::cerr << "segment requires --count, --auto or --all\n";
        return 2;
    }

    try {
        if (stats->parsed()) return run_stats(opt);
        if (freq->parsed()) return run_freq(opt);
        if (predict->parsed()) return run_predict(opt);
        if (segment->parsed()) return run_segment(opt);
        if (ipa_segment->parsed()) return run_ipa_segment(opt);
        if (evaluate->parsed()) return run_eval(opt);
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
