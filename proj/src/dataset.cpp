#include "ngcl/dataset.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <string>

#include "ngcl/errors.hpp"
#include "ngcl/rng.hpp"

namespace ngcl {

Dataset synth_blobs(int num_classes, int per_class, Index dim, Scalar spread,
                    std::uint64_t seed) {
    if (num_classes < 1 || per_class < 1 || dim < 1) {
        throw ConfigError("synth_blobs: counts and dim must be >= 1");
    }
    if (!(spread > 0.0)) {
        throw ConfigError("synth_blobs: spread must be > 0");
    }

    SplitMix64 rng(seed);
    Matrix centers(dim, num_classes);
    for (int k = 0; k < num_classes; ++k) {
        for (Index d = 0; d < dim; ++d) {
            centers(d, k) = rng.uniform(-1.0, 1.0);
        }
    }

    Dataset ds;
    ds.num_classes = num_classes;
    ds.feature_dim = dim;
    ds.name = "synth_blobs";
    ds.examples.reserve(static_cast<std::size_t>(num_classes) * per_class);
    for (int k = 0; k < num_classes; ++k) {
        for (int i = 0; i < per_class; ++i) {
            Vector x(dim);
            for (Index d = 0; d < dim; ++d) {
                x[d] = centers(d, k) + spread * rng.next_normal();
            }
            ds.examples.push_back(LabeledExample{std::move(x), k});
        }
    }
    return ds;
}

TrainTestSplit split_train_test(const Dataset& dataset) {
    std::vector<std::vector<std::size_t>> by_class(
        static_cast<std::size_t>(dataset.num_classes));
    for (std::size_t i = 0; i < dataset.examples.size(); ++i) {
        by_class[static_cast<std::size_t>(dataset.examples[i].label)].push_back(i);
    }

    TrainTestSplit split;
    for (Dataset* part : {&split.train, &split.test}) {
        part->num_classes = dataset.num_classes;
        part->feature_dim = dataset.feature_dim;
        part->name = dataset.name;
    }
    split.train.name += "/train";
    split.test.name += "/test";

    for (const auto& indices : by_class) {
        const std::size_t n = indices.size();
        const std::size_t train_n = n == 0 ? 0 : std::max<std::size_t>(1, n * 4 / 5);
        for (std::size_t i = 0; i < n; ++i) {
            (i < train_n ? split.train : split.test)
                .examples.push_back(dataset.examples[indices[i]]);
        }
    }
    return split;
}

namespace {

constexpr std::uint32_t kImagesMagic = 0x00000803;  // ubyte, 3 dims
constexpr std::uint32_t kLabelsMagic = 0x00000801;  // ubyte, 1 dim

std::uint32_t read_u32_be(std::istream& in, const std::string& path) {
    unsigned char bytes[4];
    in.read(reinterpret_cast<char*>(bytes), 4);
    if (!in) {
        throw IoError("idx: truncated file " + path);
    }
    return (std::uint32_t(bytes[0]) << 24) | (std::uint32_t(bytes[1]) << 16) |
           (std::uint32_t(bytes[2]) << 8) | std::uint32_t(bytes[3]);
}

void write_u32_be(std::ostream& out, std::uint32_t v) {
    const unsigned char bytes[4] = {
        static_cast<unsigned char>(v >> 24), static_cast<unsigned char>(v >> 16),
        static_cast<unsigned char>(v >> 8), static_cast<unsigned char>(v)};
    out.write(reinterpret_cast<const char*>(bytes), 4);
}

std::ifstream open_binary(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("idx: cannot open " + path);
    }
    return in;
}

}  // namespace

Dataset load_idx(const std::string& images_path,
                 const std::string& labels_path) {
    std::ifstream images = open_binary(images_path);
    std::ifstream labels = open_binary(labels_path);

    const std::uint32_t images_magic = read_u32_be(images, images_path);
    if (images_magic != kImagesMagic) {
        throw FormatError("idx: bad images magic in " + images_path +
                          " (got " + std::to_string(images_magic) + ")");
    }
    const std::uint32_t count = read_u32_be(images, images_path);
    const std::uint32_t rows = read_u32_be(images, images_path);
    const std::uint32_t cols = read_u32_be(images, images_path);

    const std::uint32_t labels_magic = read_u32_be(labels, labels_path);
    if (labels_magic != kLabelsMagic) {
        throw FormatError("idx: bad labels magic in " + labels_path +
                          " (got " + std::to_string(labels_magic) + ")");
    }
    const std::uint32_t label_count = read_u32_be(labels, labels_path);
    if (label_count != count) {
        throw ConsistencyError("idx: " + std::to_string(count) +
                               " images but " + std::to_string(label_count) +
                               " labels");
    }

    const Index dim = static_cast<Index>(rows) * static_cast<Index>(cols);
    Dataset ds;
    ds.feature_dim = dim;
    ds.name = images_path;
    ds.examples.reserve(count);

    std::vector<unsigned char> pixels(static_cast<std::size_t>(dim));
    int max_label = -1;
    for (std::uint32_t i = 0; i < count; ++i) {
        images.read(reinterpret_cast<char*>(pixels.data()),
                    static_cast<std::streamsize>(pixels.size()));
        if (!images) {
            throw IoError("idx: truncated file " + images_path);
        }
        char label_byte;
        labels.read(&label_byte, 1);
        if (!labels) {
            throw IoError("idx: truncated file " + labels_path);
        }
        Vector x(dim);
        for (Index d = 0; d < dim; ++d) {
            x[d] = static_cast<Scalar>(pixels[static_cast<std::size_t>(d)]) / 255.0;
        }
        const int label = static_cast<unsigned char>(label_byte);
        max_label = std::max(max_label, label);
        ds.examples.push_back(LabeledExample{std::move(x), label});
    }
    ds.num_classes = max_label + 1;
    return ds;
}

void write_idx(const Dataset& dataset, Index rows, Index cols,
               const std::string& images_path,
               const std::string& labels_path) {
    if (rows * cols != dataset.feature_dim) {
        throw ShapeError("write_idx: rows * cols must equal feature_dim");
    }
    std::ofstream images(images_path, std::ios::binary);
    std::ofstream labels(labels_path, std::ios::binary);
    if (!images || !labels) {
        throw IoError("idx: cannot open output files for writing");
    }

    write_u32_be(images, kImagesMagic);
    write_u32_be(images, static_cast<std::uint32_t>(dataset.examples.size()));
    write_u32_be(images, static_cast<std::uint32_t>(rows));
    write_u32_be(images, static_cast<std::uint32_t>(cols));
    write_u32_be(labels, kLabelsMagic);
    write_u32_be(labels, static_cast<std::uint32_t>(dataset.examples.size()));

    for (const LabeledExample& example : dataset.examples) {
        for (Index d = 0; d < dataset.feature_dim; ++d) {
            const Scalar v = example.features[d];
            if (!(v >= 0.0 && v <= 1.0)) {
                throw FormatError("write_idx: feature values must lie in [0, 1]");
            }
            images.put(static_cast<char>(
                static_cast<unsigned char>(std::lround(v * 255.0))));
        }
        labels.put(static_cast<char>(static_cast<unsigned char>(example.label)));
    }
    if (!images || !labels) {
        throw IoError("idx: write failure");
    }
}

}  // namespace ngcl
