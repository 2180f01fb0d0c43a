#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <vector>

#include "ngcl/dataset.hpp"

using namespace ngcl;

namespace {

std::filesystem::path temp_path(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("ngcl_test_" + name);
}

void write_bytes(const std::filesystem::path& path,
                 const std::vector<unsigned char>& bytes) {
    std::ofstream out(path, std::ios::binary);
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
}

std::vector<unsigned char> read_bytes(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    return std::vector<unsigned char>(std::istreambuf_iterator<char>(in), {});
}

void append_u32_be(std::vector<unsigned char>& bytes, std::uint32_t v) {
    bytes.push_back(static_cast<unsigned char>(v >> 24));
    bytes.push_back(static_cast<unsigned char>(v >> 16));
    bytes.push_back(static_cast<unsigned char>(v >> 8));
    bytes.push_back(static_cast<unsigned char>(v));
}

/// Two 2x2 images with pixels [0,255,128,64] and [255,0,0,1], labels 0, 1.
struct TinyIdx {
    std::filesystem::path images = temp_path("images.idx");
    std::filesystem::path labels = temp_path("labels.idx");

    TinyIdx() {
        std::vector<unsigned char> image_bytes;
        append_u32_be(image_bytes, 0x00000803);
        append_u32_be(image_bytes, 2);  // count
        append_u32_be(image_bytes, 2);  // rows
        append_u32_be(image_bytes, 2);  // cols
        for (unsigned char b : {0, 255, 128, 64, 255, 0, 0, 1}) {
            image_bytes.push_back(b);
        }
        write_bytes(images, image_bytes);

        std::vector<unsigned char> label_bytes;
        append_u32_be(label_bytes, 0x00000801);
        append_u32_be(label_bytes, 2);
        label_bytes.push_back(0);
        label_bytes.push_back(1);
        write_bytes(labels, label_bytes);
    }
};

}  // namespace

TEST_CASE("synth_blobs: counting and labels") {
    const Dataset ds = synth_blobs(3, 10, 2, 0.5, 7);
    CHECK(ds.examples.size() == 30);
    CHECK(ds.num_classes == 3);
    CHECK(ds.feature_dim == 2);
    std::vector<int> counts(3, 0);
    for (const auto& e : ds.examples) {
        REQUIRE(e.label >= 0);
        REQUIRE(e.label < 3);
        counts[static_cast<std::size_t>(e.label)]++;
        CHECK(e.features.allFinite());
    }
    CHECK(counts == std::vector<int>{10, 10, 10});
}

TEST_CASE("synth_blobs: vanishing spread is separable by nearest center") {
    const Dataset ds = synth_blobs(4, 12, 3, 1e-9, 11);
    // Class centers recovered as the mean of each class's examples.
    std::vector<Vector> centers(4, Vector::Zero(3));
    std::vector<int> counts(4, 0);
    for (const auto& e : ds.examples) {
        centers[static_cast<std::size_t>(e.label)] += e.features;
        counts[static_cast<std::size_t>(e.label)]++;
    }
    for (int k = 0; k < 4; ++k) centers[static_cast<std::size_t>(k)] /= counts[static_cast<std::size_t>(k)];

    int correct = 0;
    for (const auto& e : ds.examples) {
        int best = 0;
        Scalar best_dist = (e.features - centers[0]).squaredNorm();
        for (int k = 1; k < 4; ++k) {
            const Scalar d = (e.features - centers[static_cast<std::size_t>(k)]).squaredNorm();
            if (d < best_dist) {
                best_dist = d;
                best = k;
            }
        }
        correct += (best == e.label);
    }
    CHECK(correct == static_cast<int>(ds.examples.size()));
}

TEST_CASE("synth_blobs: same seed gives bit-identical datasets") {
    const Dataset a = synth_blobs(5, 20, 4, 0.3, 99);
    const Dataset b = synth_blobs(5, 20, 4, 0.3, 99);
    REQUIRE(a.examples.size() == b.examples.size());
    for (std::size_t i = 0; i < a.examples.size(); ++i) {
        CHECK(a.examples[i].features == b.examples[i].features);
        CHECK(a.examples[i].label == b.examples[i].label);
    }
    const Dataset c = synth_blobs(5, 20, 4, 0.3, 100);
    CHECK(a.examples[0].features != c.examples[0].features);
}

TEST_CASE("split_train_test: per-class 80/20, disjoint") {
    const Dataset ds = synth_blobs(3, 10, 2, 0.5, 1);
    const TrainTestSplit split = split_train_test(ds);
    CHECK(split.train.examples.size() == 24);
    CHECK(split.test.examples.size() == 6);

    std::vector<int> train_counts(3, 0), test_counts(3, 0);
    for (const auto& e : split.train.examples) train_counts[static_cast<std::size_t>(e.label)]++;
    for (const auto& e : split.test.examples) test_counts[static_cast<std::size_t>(e.label)]++;
    CHECK(train_counts == std::vector<int>{8, 8, 8});
    CHECK(test_counts == std::vector<int>{2, 2, 2});

    // Disjoint contents: no blob sample lands in both halves.
    for (const auto& train_example : split.train.examples) {
        for (const auto& test_example : split.test.examples) {
            CHECK(train_example.features != test_example.features);
        }
    }
}

TEST_CASE("load_idx: parses the hand-built pair and scales pixels") {
    const TinyIdx idx;
    const Dataset ds = load_idx(idx.images.string(), idx.labels.string());
    CHECK(ds.examples.size() == 2);
    CHECK(ds.feature_dim == 4);
    CHECK(ds.num_classes == 2);

    CHECK(ds.examples[0].features[0] == 0.0);
    CHECK(ds.examples[0].features[1] == 1.0);
    CHECK(ds.examples[0].features[2] == doctest::Approx(128.0 / 255.0));
    CHECK(ds.examples[0].features[3] == doctest::Approx(64.0 / 255.0));
    CHECK(ds.examples[0].label == 0);
    CHECK(ds.examples[1].label == 1);

    for (const auto& e : ds.examples) {
        CHECK(e.features.allFinite());
        CHECK(e.label < ds.num_classes);
        CHECK((e.features.array() >= 0.0).all());
        CHECK((e.features.array() <= 1.0).all());
    }
}

TEST_CASE("load_idx: wrong magic in the images slot") {
    const TinyIdx idx;
    // The labels file carries magic 0x00000801, which is invalid for images.
    CHECK_THROWS_AS(load_idx(idx.labels.string(), idx.labels.string()),
                    FormatError);
}

TEST_CASE("load_idx: count mismatch between files") {
    const TinyIdx idx;
    std::vector<unsigned char> label_bytes;
    append_u32_be(label_bytes, 0x00000801);
    append_u32_be(label_bytes, 3);
    label_bytes.insert(label_bytes.end(), {0, 1, 0});
    const auto bad_labels = temp_path("labels3.idx");
    write_bytes(bad_labels, label_bytes);
    CHECK_THROWS_AS(load_idx(idx.images.string(), bad_labels.string()),
                    ConsistencyError);
}

TEST_CASE("load_idx: truncated file") {
    const TinyIdx idx;
    auto bytes = read_bytes(idx.images);
    bytes.resize(bytes.size() - 3);
    const auto truncated = temp_path("truncated.idx");
    write_bytes(truncated, bytes);
    CHECK_THROWS_AS(load_idx(truncated.string(), idx.labels.string()), IoError);

    CHECK_THROWS_AS(load_idx(temp_path("missing.idx").string(), idx.labels.string()),
                    IoError);
}

TEST_CASE("write_idx: round trip reproduces the files byte for byte") {
    const TinyIdx idx;
    const Dataset ds = load_idx(idx.images.string(), idx.labels.string());

    const auto images_out = temp_path("rt_images.idx");
    const auto labels_out = temp_path("rt_labels.idx");
    write_idx(ds, 2, 2, images_out.string(), labels_out.string());

    CHECK(read_bytes(images_out) == read_bytes(idx.images));
    CHECK(read_bytes(labels_out) == read_bytes(idx.labels));
}
