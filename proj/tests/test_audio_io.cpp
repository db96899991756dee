// tests/test_audio_io.cpp

// Copyright 2026  gaborfeat authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include <cstdint>
#include <cstring>
#include <fstream>
#include <random>

#include "doctest.h"
#include "gaborfeat/audio.hpp"
#include "gaborfeat/csv_io.hpp"
#include "gaborfeat/htk_io.hpp"
#include "gaborfeat/labels.hpp"
#include "test_util.hpp"

using namespace gaborfeat;

TEST_CASE("read_wav: silence, scaling, sine content") {
  testutil::TempDir dir("wav");

  SUBCASE("one second of silence") {
    testutil::write_wav_pcm16(dir.file("silence.wav"),
                              std::vector<int16_t>(16000, 0), 16000);
    const AudioSignal sig = read_wav(dir.file("silence.wav"));
    CHECK(sig.sample_rate_hz == 16000);
    REQUIRE(sig.samples.size() == 16000);
    for (double s : sig.samples) CHECK(s == 0.0);
  }

  SUBCASE("full-scale negative sample maps to -1") {
    testutil::write_wav_pcm16(dir.file("fs.wav"), {-32768, 32767, 0}, 16000);
    const AudioSignal sig = read_wav(dir.file("fs.wav"));
    CHECK(sig.samples[0] == -1.0);
    CHECK(sig.samples[1] == doctest::Approx(32767.0 / 32768.0));
    CHECK(sig.samples[2] == 0.0);
  }

  SUBCASE("generated 1 kHz sine matches the analytic signal") {
    const auto pcm = testutil::sine_pcm16(1000.0, 0.5, 16000, 16000);
    testutil::write_wav_pcm16(dir.file("sine.wav"), pcm, 16000);
    const AudioSignal sig = read_wav(dir.file("sine.wav"));
    REQUIRE(sig.samples.size() == pcm.size());
    for (size_t i = 0; i < pcm.size(); ++i) {
      const double analytic =
          0.5 * (32767.0 / 32768.0) *
          std::sin(2.0 * M_PI * 1000.0 * static_cast<double>(i) / 16000.0);
      CHECK(std::abs(sig.samples[i] - analytic) <= 1.0 / 32768.0);
      CHECK(sig.samples[i] == static_cast<double>(pcm[i]) / 32768.0);
    }
  }
}

TEST_CASE("read_wav: malformed and unsupported files are rejected") {
  testutil::TempDir dir("wavbad");

  SUBCASE("missing file") {
    CHECK_THROWS_AS(read_wav(dir.file("nope.wav")), std::runtime_error);
  }

  SUBCASE("not a RIFF file") {
    std::ofstream(dir.file("x.wav"), std::ios::binary) << "hello world, "
                                                          "this is text";
    CHECK_THROWS_WITH_AS(read_wav(dir.file("x.wav")),
                         doctest::Contains("malformed WAV header"),
                         std::runtime_error);
  }

  SUBCASE("truncated data chunk") {
    testutil::write_wav_pcm16(dir.file("t.wav"),
                              std::vector<int16_t>(100, 7), 16000);
    // Chop the last 50 bytes off.
    std::ifstream in(dir.file("t.wav"), std::ios::binary);
    std::vector<char> bytes((std::istreambuf_iterator<char>(in)),
                            std::istreambuf_iterator<char>());
    in.close();
    bytes.resize(bytes.size() - 50);
    std::ofstream out(dir.file("t.wav"), std::ios::binary | std::ios::trunc);
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    out.close();
    CHECK_THROWS_WITH_AS(read_wav(dir.file("t.wav")),
                         doctest::Contains("truncated"), std::runtime_error);
  }

  SUBCASE("stereo rejected") {
    // Patch the channel count in a valid header.
    testutil::write_wav_pcm16(dir.file("s.wav"),
                              std::vector<int16_t>(10, 0), 16000);
    std::fstream f(dir.file("s.wav"),
                   std::ios::binary | std::ios::in | std::ios::out);
    f.seekp(22);
    const char two[2] = {2, 0};
    f.write(two, 2);
    f.close();
    CHECK_THROWS_WITH_AS(read_wav(dir.file("s.wav")),
                         doctest::Contains("mono"), std::runtime_error);
  }

  SUBCASE("compressed format tag rejected") {
    testutil::write_wav_pcm16(dir.file("c.wav"),
                              std::vector<int16_t>(10, 0), 16000);
    std::fstream f(dir.file("c.wav"),
                   std::ios::binary | std::ios::in | std::ios::out);
    f.seekp(20);
    const char alaw[2] = {6, 0};
    f.write(alaw, 2);
    f.close();
    CHECK_THROWS_WITH_AS(read_wav(dir.file("c.wav")),
                         doctest::Contains("PCM"), std::runtime_error);
  }
}

TEST_CASE("read_labels: format, sorting and invariants") {
  SUBCASE("two segments parse") {
    const LabelTrack t = parse_labels("0 10 AA\n10 20 T\n");
    REQUIRE(t.segments.size() == 2);
    CHECK(t.segments[0].phoneme == "AA");
    CHECK(t.segments[1].start_frame == 10);
  }

  SUBCASE("unsorted input is sorted") {
    const LabelTrack t = parse_labels("10 20 T\n0 10 AA\n");
    CHECK(t.segments[0].phoneme == "AA");
  }

  SUBCASE("empty segment rejected") {
    CHECK_THROWS_AS(parse_labels("5 5 AA\n"), std::runtime_error);
  }

  SUBCASE("overlap rejected") {
    CHECK_THROWS_WITH_AS(parse_labels("0 10 AA\n5 15 T\n"),
                         doctest::Contains("overlap"), std::runtime_error);
  }

  SUBCASE("non-numeric field rejected") {
    CHECK_THROWS_AS(parse_labels("a 10 AA\n"), std::runtime_error);
    CHECK_THROWS_AS(parse_labels("0 1x AA\n"), std::runtime_error);
  }

  SUBCASE("random segment lists: overlaps always caught") {
    std::mt19937 gen(1234);
    for (int trial = 0; trial < 200; ++trial) {
      // Build a clean, gapless-or-gapped segment list, then maybe corrupt.
      std::string text;
      long cursor = 0;
      const int n = 1 + static_cast<int>(gen() % 8);
      std::vector<std::pair<long, long>> segs;
      for (int i = 0; i < n; ++i) {
        cursor += static_cast<long>(gen() % 3);
        const long len = 1 + static_cast<long>(gen() % 10);
        segs.emplace_back(cursor, cursor + len);
        cursor += len;
      }
      const bool corrupt = trial % 2 == 1 && n >= 2;
      if (corrupt) {
        // Force an overlap between two adjacent segments.
        const size_t at = 1 + gen() % (segs.size() - 1);
        segs[at].first = segs[at - 1].second - 1;
        if (segs[at].first >= segs[at].second)
          segs[at].second = segs[at].first + 1;
      }
      for (const auto& [s, e] : segs)
        text += std::to_string(s) + " " + std::to_string(e) + " AA\n";
      if (corrupt)
        CHECK_THROWS_AS(parse_labels(text), std::runtime_error);
      else
        CHECK_NOTHROW(parse_labels(text));
    }
  }
}

TEST_CASE("HTK writer: exact header bytes and round trips") {
  testutil::TempDir dir("htk");

  SUBCASE("1x1 zero matrix produces the documented 16 bytes") {
    FeatureMatrix m;
    m.values = Matrix(1, 1, 0.0);
    m.frame_shift_s = 0.01;
    m.dim_provenance = {"d"};
    write_htk(m, dir.file("one.htk"));

    std::ifstream in(dir.file("one.htk"), std::ios::binary);
    std::vector<uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                               std::istreambuf_iterator<char>());
    REQUIRE(bytes.size() == 16);
    const uint8_t expected[16] = {0, 0, 0, 1,  0, 1, 0x86, 0xA0,
                                  0, 4, 0, 9,  0, 0, 0,    0};
    CHECK(std::memcmp(bytes.data(), expected, 16) == 0);
  }

  SUBCASE("empty matrix is a valid header-only file") {
    FeatureMatrix m;
    m.values = Matrix(0, 3);
    m.dim_provenance = default_provenance(3);
    write_htk(m, dir.file("empty.htk"));
    const FeatureMatrix back = read_htk(dir.file("empty.htk"));
    CHECK(back.frames() == 0);
    CHECK(back.dims() == 3);
  }

  SUBCASE("random 98x657 matrix survives bit-exactly") {
    FeatureMatrix m;
    m.values = testutil::random_matrix(98, 657, 42, -50.0, 50.0);
    m.frame_shift_s = 0.010;
    m.dim_provenance = default_provenance(657);
    write_htk(m, dir.file("big.htk"));
    const FeatureMatrix back = read_htk(dir.file("big.htk"));
    REQUIRE(back.frames() == 98);
    REQUIRE(back.dims() == 657);
    CHECK(back.frame_shift_s == doctest::Approx(0.010));
    for (int r = 0; r < 98; ++r)
      for (int c = 0; c < 657; ++c)
        CHECK(static_cast<float>(back.values(r, c)) ==
              static_cast<float>(m.values(r, c)));
  }

  SUBCASE("dimension limit enforced") {
    FeatureMatrix m;
    m.values = Matrix(1, kHtkMaxDims + 1);
    m.dim_provenance = default_provenance(kHtkMaxDims + 1);
    CHECK_THROWS_AS(write_htk(m, dir.file("big2.htk")),
                    std::invalid_argument);
  }
}

TEST_CASE("CSV matrix round trip and layout") {
  testutil::TempDir dir("csv");

  SUBCASE("2x2 identity with names") {
    Matrix eye(2, 2);
    eye(0, 0) = eye(1, 1) = 1.0;
    write_csv_matrix(eye, {"AA", "T"}, {"AA", "T"}, dir.file("eye.csv"));
    std::ifstream in(dir.file("eye.csv"));
    std::string l1, l2, l3;
    std::getline(in, l1);
    std::getline(in, l2);
    std::getline(in, l3);
    CHECK(l1 == ",AA,T");
    CHECK(l2 == "AA,1,0");
    CHECK(l3 == "T,0,1");
  }

  SUBCASE("empty matrix writes header only") {
    write_csv_matrix(Matrix(0, 2), {}, {"x", "y"}, dir.file("empty.csv"));
    std::ifstream in(dir.file("empty.csv"));
    std::string line;
    int lines = 0;
    while (std::getline(in, line)) ++lines;
    CHECK(lines == 1);
  }

  SUBCASE("values survive a parse round trip exactly") {
    const Matrix m = testutil::random_matrix(7, 5, 99, -1e6, 1e6);
    write_csv_matrix(m, {}, {}, dir.file("rt.csv"));
    const CsvMatrix back = read_csv_matrix(dir.file("rt.csv"));
    REQUIRE(back.values.rows() == 7);
    REQUIRE(back.values.cols() == 5);
    CHECK(back.row_names.empty());
    CHECK(back.col_names.empty());
    for (int r = 0; r < 7; ++r)
      for (int c = 0; c < 5; ++c) CHECK(back.values(r, c) == m(r, c));
  }

  SUBCASE("named matrix round trip") {
    Matrix m(2, 3);
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 3; ++c) m(r, c) = 0.1 * r - 7.5 * c;
    write_csv_matrix(m, {"r0", "r1"}, {"a", "b", "c"}, dir.file("n.csv"));
    const CsvMatrix back = read_csv_matrix(dir.file("n.csv"));
    CHECK(back.row_names == std::vector<std::string>{"r0", "r1"});
    CHECK(back.col_names == std::vector<std::string>{"a", "b", "c"});
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 3; ++c) CHECK(back.values(r, c) == m(r, c));
  }

  SUBCASE("name count mismatch rejected") {
    CHECK_THROWS_AS(
        write_csv_matrix(Matrix(2, 2), {"only-one"}, {}, dir.file("bad.csv")),
        std::invalid_argument);
  }
}
