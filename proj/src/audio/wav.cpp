#include "sonact/audio/wav.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <stdexcept>
#include <string>

namespace sonact::audio {

namespace {

std::uint16_t read_u16(const std::uint8_t* p) {
  return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}

std::uint32_t read_u32(const std::uint8_t* p) {
  return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
         (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
}

void put_u16(std::vector<std::uint8_t>& out, std::uint16_t v) {
  out.push_back(static_cast<std::uint8_t>(v & 0xff));
  out.push_back(static_cast<std::uint8_t>(v >> 8));
}

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  out.push_back(static_cast<std::uint8_t>(v & 0xff));
  out.push_back(static_cast<std::uint8_t>((v >> 8) & 0xff));
  out.push_back(static_cast<std::uint8_t>((v >> 16) & 0xff));
  out.push_back(static_cast<std::uint8_t>((v >> 24) & 0xff));
}

}  // namespace

Waveform decode_wav(const std::vector<std::uint8_t>& bytes) {
  if (bytes.size() < 12 || std::memcmp(bytes.data(), "RIFF", 4) != 0 ||
      std::memcmp(bytes.data() + 8, "WAVE", 4) != 0) {
    throw std::runtime_error("wav: malformed RIFF/WAVE header");
  }

  bool have_fmt = false;
  int sample_rate = 0;
  std::size_t data_off = 0, data_len = 0;

  std::size_t pos = 12;
  while (pos + 8 <= bytes.size()) {
    const char* id = reinterpret_cast<const char*>(bytes.data() + pos);
    std::uint32_t size = read_u32(bytes.data() + pos + 4);
    std::size_t body = pos + 8;
    if (body + size > bytes.size()) throw std::runtime_error("wav: truncated chunk");
    if (std::memcmp(id, "fmt ", 4) == 0) {
      if (size < 16) throw std::runtime_error("wav: fmt chunk too small");
      std::uint16_t format = read_u16(bytes.data() + body);
      std::uint16_t channels = read_u16(bytes.data() + body + 2);
      sample_rate = static_cast<int>(read_u32(bytes.data() + body + 4));
      std::uint16_t bits = read_u16(bytes.data() + body + 14);
      if (format != 1) throw std::runtime_error("wav: unsupported encoding (non-PCM)");
      if (channels != 1)
        throw std::runtime_error("wav: unsupported channel count (" + std::to_string(channels) +
                                 "), expected mono");
      if (bits != 16)
        throw std::runtime_error("wav: unsupported sample width (" + std::to_string(bits) +
                                 " bits), expected 16");
      if (sample_rate <= 0) throw std::runtime_error("wav: invalid sample rate");
      have_fmt = true;
    } else if (std::memcmp(id, "data", 4) == 0) {
      data_off = body;
      data_len = size;
    }
    pos = body + size + (size & 1);  // chunks are word-aligned
  }

  if (!have_fmt) throw std::runtime_error("wav: missing fmt chunk");
  if (data_len == 0) throw std::runtime_error("wav: missing or empty data chunk");
  if (data_len % 2 != 0) throw std::runtime_error("wav: odd data size for 16-bit samples");

  Waveform w;
  w.sample_rate = sample_rate;
  w.samples.resize(data_len / 2);
  for (std::size_t i = 0; i < w.samples.size(); ++i) {
    std::int16_t s = static_cast<std::int16_t>(read_u16(bytes.data() + data_off + 2 * i));
    w.samples[i] = static_cast<double>(s) / 32768.0;
  }
  return w;
}

std::vector<std::uint8_t> encode_wav(const Waveform& w) {
  if (w.sample_rate <= 0) throw std::runtime_error("wav: invalid sample rate");
  if (w.samples.empty()) throw std::runtime_error("wav: empty waveform");

  const std::uint32_t data_bytes = static_cast<std::uint32_t>(w.samples.size() * 2);
  std::vector<std::uint8_t> out;
  out.reserve(44 + data_bytes);

  out.insert(out.end(), {'R', 'I', 'F', 'F'});
  put_u32(out, 36 + data_bytes);
  out.insert(out.end(), {'W', 'A', 'V', 'E'});
  out.insert(out.end(), {'f', 'm', 't', ' '});
  put_u32(out, 16);
  put_u16(out, 1);  // PCM
  put_u16(out, 1);  // mono
  put_u32(out, static_cast<std::uint32_t>(w.sample_rate));
  put_u32(out, static_cast<std::uint32_t>(w.sample_rate * 2));  // byte rate
  put_u16(out, 2);                                              // block align
  put_u16(out, 16);                                             // bits
  out.insert(out.end(), {'d', 'a', 't', 'a'});
  put_u32(out, data_bytes);

  for (double x : w.samples) {
    double c = std::clamp(x, -1.0, 1.0);
    std::int32_t q = static_cast<std::int32_t>(std::lrint(c * 32767.0));
    q = std::clamp(q, -32768, 32767);
    put_u16(out, static_cast<std::uint16_t>(static_cast<std::int16_t>(q)));
  }
  return out;
}

Waveform read_wav_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("wav: cannot open " + path.string());
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  return decode_wav(bytes);
}

void write_wav_file(const std::filesystem::path& path, const Waveform& w) {
  auto bytes = encode_wav(w);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("wav: cannot write " + path.string());
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
}

}  // namespace sonact::audio
