#include "figureqa/corpus.hpp"

#include <atomic>
#include <charconv>
#include <exception>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "figureqa/data_synth.hpp"
#include "figureqa/qa.hpp"
#include "figureqa/renderer.hpp"
#include "figureqa/rng.hpp"

namespace figureqa {

namespace fs = std::filesystem;

namespace {

constexpr std::uint64_t kBalanceStream = 0xBA1A'0000;

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

template <typename T>
T parse_number(std::string_view key, std::string_view value) {
  T v{};
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
  if (ec != std::errc{} || ptr != value.data() + value.size())
    throw ConfigError("config key '" + std::string(key) + "': bad number '" + std::string(value) + "'");
  return v;
}

bool parse_bool(std::string_view key, std::string_view value) {
  if (value == "true" || value == "1" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "no") return false;
  throw ConfigError("config key '" + std::string(key) + "': expected a boolean");
}

struct FigureOutput {
  std::string record;  // serialized annotation record
  std::vector<QAPair> qa;
};

Json config_to_json(const CorpusConfig& c) {
  Json counts;
  for (auto s : kSplits) counts[std::string(to_string(s))] = c.count(s);
  return Json{{"master_seed", c.master_seed},
              {"counts", counts},
              {"base_height", c.base_height},
              {"per_segment_boxes", c.per_segment_boxes},
              {"magnitude_factors", c.magnitude_factors}};
}

void check_config(const CorpusConfig& c) {
  for (int n : c.counts)
    if (n < 0) throw ConfigError("split counts must be non-negative");
  if (c.base_height < 64 || c.base_height > 4096) throw ConfigError("base_height must be in [64, 4096]");
  if (c.magnitude_factors.empty()) throw ConfigError("magnitude_factors must not be empty");
  for (int f : c.magnitude_factors)
    if (f <= 0) throw ConfigError("magnitude factors must be positive");
}

}  // namespace

std::string_view to_string(Split s) {
  switch (s) {
    case Split::Train: return "train";
    case Split::Val1: return "val1";
    case Split::Val2: return "val2";
    case Split::Test1: return "test1";
    case Split::Test2: return "test2";
  }
  return "?";
}

ColorMode split_color_mode(Split s) {
  return (s == Split::Val2 || s == Split::Test2) ? ColorMode::Alternated : ColorMode::Training;
}

CorpusConfig parse_config(std::string_view text) {
  CorpusConfig c;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw ConfigError("config line " + std::to_string(line_no) + ": expected key = value");
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view value = trim(line.substr(eq + 1));

    bool is_split = false;
    for (auto s : kSplits)
      if (key == to_string(s)) c.count(s) = parse_number<int>(key, value), is_split = true;
    if (is_split) continue;

    if (key == "master_seed") {
      c.master_seed = parse_number<std::uint64_t>(key, value);
    } else if (key == "base_height") {
      c.base_height = parse_number<int>(key, value);
    } else if (key == "output_dir") {
      c.output_dir = std::string(value);
    } else if (key == "per_segment_boxes") {
      c.per_segment_boxes = parse_bool(key, value);
    } else if (key == "magnitude_factors") {
      c.magnitude_factors.clear();
      std::string_view rest = value;
      while (!rest.empty()) {
        const auto comma = rest.find(',');
        c.magnitude_factors.push_back(parse_number<int>(key, trim(rest.substr(0, comma))));
        rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
      }
    } else {
      throw ConfigError("unknown config key '" + std::string(key) + "'");
    }
  }
  check_config(c);
  return c;
}

CorpusConfig load_config(const fs::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw ConfigError("cannot read config file " + file.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string config_to_text(const CorpusConfig& c) {
  std::ostringstream out;
  out << "master_seed = " << c.master_seed << "\n";
  for (auto s : kSplits) out << to_string(s) << " = " << c.count(s) << "\n";
  out << "base_height = " << c.base_height << "\n";
  out << "output_dir = " << c.output_dir.string() << "\n";
  out << "per_segment_boxes = " << (c.per_segment_boxes ? "true" : "false") << "\n";
  out << "magnitude_factors = ";
  for (std::size_t i = 0; i < c.magnitude_factors.size(); ++i) out << (i ? "," : "") << c.magnitude_factors[i];
  out << "\n";
  return out.str();
}

Json CorpusManifest::to_json() const {
  Json splits_json = Json::array();
  for (const auto& s : splits)
    splits_json.push_back(Json{{"name", to_string(s.split)},
                               {"color_mode", to_string(split_color_mode(s.split))},
                               {"first_figure_id", s.first_figure_id},
                               {"figure_count", s.figure_count},
                               {"qa_count", s.qa_count}});
  Json table = Json::array();
  for (const auto& c : build_color_table()) table.push_back(color_to_json(c));
  return Json{{"generator_version", kGeneratorVersion},
              {"color_table_version", kColorTableVersion},
              {"config", config_to_json(config)},
              {"color_partition", Json{{"A", scheme.subset_a}, {"B", scheme.subset_b}}},
              {"color_table", std::move(table)},
              {"splits", std::move(splits_json)}};
}

void write_file_atomic(const fs::path& path, std::string_view bytes) {
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + tmp.string() + " for writing");
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw IoError("write failed: " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) throw IoError("rename " + tmp.string() + " -> " + path.string() + ": " + ec.message());
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

CorpusManifest generate_corpus(const CorpusConfig& config, int workers) {
  check_config(config);
  if (workers <= 0) workers = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));

  const auto colors = build_color_table();
  CorpusManifest manifest;
  manifest.config = config;
  manifest.scheme = split_colors(colors, config.master_seed);

  const fs::path root = config.output_dir;
  std::error_code ec;
  fs::create_directories(root, ec);
  if (ec) throw IoError("cannot create " + root.string() + ": " + ec.message());

  SynthOptions synth;
  synth.magnitude_factors = config.magnitude_factors;
  RenderOptions render_opts;
  render_opts.base_height = config.base_height;
  render_opts.per_segment_boxes = config.per_segment_boxes;
  const FontSet& fonts = FontSet::embedded();

  int next_id = 0;
  for (std::size_t split_index = 0; split_index < kSplits.size(); ++split_index) {
    const Split split = kSplits[split_index];
    const int count = config.count(split);
    const int first_id = next_id;
    next_id += count;
    const ColorScheme scheme = manifest.scheme.with_mode(split_color_mode(split));

    const fs::path dir = root / to_string(split);
    fs::create_directories(dir / "images", ec);
    if (ec) throw IoError("cannot create " + (dir / "images").string() + ": " + ec.message());

    std::vector<FigureOutput> outputs(static_cast<std::size_t>(count));
    std::atomic<int> cursor{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto work = [&] {
      for (int k; (k = cursor.fetch_add(1)) < count;) {
        try {
          const int id = first_id + k;
          const FigureType type = kFigureTypes[static_cast<std::size_t>(k) % kFigureTypes.size()];
          std::optional<FigureSpec> spec;
          std::optional<RenderResult> rendered;
          for (int attempt = 0; attempt < kMaxRenderAttempts && !rendered; ++attempt) {
            spec = sample_figure(type, id, scheme, config.master_seed, synth, attempt);
            try {
              rendered = render(*spec, colors, fonts, render_opts);
            } catch (const RenderError&) {
            }
          }
          if (!rendered)
            throw GenerationError("figure " + std::to_string(id) + " could not be rendered after " +
                                  std::to_string(kMaxRenderAttempts) + " attempts (seed " +
                                  std::to_string(figure_seed(config.master_seed, id)) + ")");
          spec->style.legend_cell = rendered->legend.cell;

          const std::string image = "images/" + std::to_string(id) + ".png";
          write_file_atomic(dir / image,
                            std::string_view(reinterpret_cast<const char*>(rendered->png.data()), rendered->png.size()));

          Json record = spec_to_json(*spec, colors);
          record["image"] = image;
          record["canvas"] = Json{{"width", rendered->width}, {"height", rendered->height}};
          record["legend"] = legend_to_json(rendered->legend);
          Json boxes = Json::array();
          for (const auto& b : rendered->boxes) boxes.push_back(box_to_json(b));
          record["boxes"] = std::move(boxes);

          auto& out = outputs[static_cast<std::size_t>(k)];
          out.record = record.dump(1);
          out.qa = generate_qa(*spec, colors);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          cursor = count;
        }
      }
    };

    std::vector<std::thread> pool;
    const int threads = std::min(workers, std::max(count, 1));
    for (int t = 1; t < threads; ++t) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);

    std::vector<QAPair> all_qa;
    std::string annotations = "[";
    for (std::size_t k = 0; k < outputs.size(); ++k) {
      annotations += k ? ",\n" : "\n";
      annotations += outputs[k].record;
      for (auto& qa : outputs[k].qa) all_qa.push_back(std::move(qa));
    }
    annotations += outputs.empty() ? "]\n" : "\n]\n";
    write_file_atomic(dir / "annotations.json", annotations);

    const auto balanced = balance(std::move(all_qa), hash64(config.master_seed, kBalanceStream + split_index));
    Json qa_json = Json::array();
    for (const auto& qa : balanced) qa_json.push_back(qa_to_json(qa, colors));
    write_file_atomic(dir / "qa_pairs.json", qa_json.dump(1) + "\n");

    manifest.splits.push_back({split, first_id, count, balanced.size()});
  }

  write_file_atomic(root / "manifest.json", manifest.to_json().dump(2) + "\n");
  return manifest;
}

}  // namespace figureqa
