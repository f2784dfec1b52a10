#include "nvlab/field.hpp"

#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>

namespace nvlab {

namespace {

void put_u32(std::ostream& out, std::uint32_t v) {
  unsigned char b[4] = {static_cast<unsigned char>(v), static_cast<unsigned char>(v >> 8),
                        static_cast<unsigned char>(v >> 16), static_cast<unsigned char>(v >> 24)};
  out.write(reinterpret_cast<const char*>(b), 4);
}

std::uint32_t get_u32(std::istream& in) {
  unsigned char b[4];
  in.read(reinterpret_cast<char*>(b), 4);
  return std::uint32_t(b[0]) | std::uint32_t(b[1]) << 8 | std::uint32_t(b[2]) << 16 |
         std::uint32_t(b[3]) << 24;
}

void put_f64(std::ostream& out, double v) {
  std::uint64_t u;
  std::memcpy(&u, &v, 8);
  unsigned char b[8];
  for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>(u >> (8 * i));
  out.write(reinterpret_cast<const char*>(b), 8);
}

double get_f64(std::istream& in) {
  unsigned char b[8];
  in.read(reinterpret_cast<char*>(b), 8);
  std::uint64_t u = 0;
  for (int i = 0; i < 8; ++i) u |= std::uint64_t(b[i]) << (8 * i);
  double v;
  std::memcpy(&v, &u, 8);
  return v;
}

}  // namespace

void write_nvf1(const SpectralField& u, std::ostream& out) {
  out.write("NVF1", 4);
  put_u32(out, std::uint32_t(u.grid().nx));
  put_u32(out, std::uint32_t(u.grid().ny));
  unsigned char flags = (u.mean_zero() ? 1 : 0) | (u.real_valued() ? 2 : 0);
  out.write(reinterpret_cast<const char*>(&flags), 1);
  for (const cplx& c : u.coeff()) {
    put_f64(out, c.real());
    put_f64(out, c.imag());
  }
  if (!out) throw std::runtime_error("write_nvf1: stream failure");
}

void write_nvf1_file(const SpectralField& u, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("write_nvf1_file: cannot open " + path);
  write_nvf1(u, f);
}

SpectralField read_nvf1(std::istream& in) {
  char magic[4];
  in.read(magic, 4);
  if (!in || std::memcmp(magic, "NVF1", 4) != 0)
    throw std::runtime_error("read_nvf1: bad magic");
  std::uint32_t nx = get_u32(in), ny = get_u32(in);
  unsigned char flags;
  in.read(reinterpret_cast<char*>(&flags), 1);
  if (!in) throw std::runtime_error("read_nvf1: truncated header");
  SpectralField u(TorusGrid(int(nx), int(ny)), flags & 1, flags & 2);
  for (std::size_t i = 0; i < u.size(); ++i) {
    double re = get_f64(in), im = get_f64(in);
    u[i] = {re, im};
  }
  if (!in) throw std::runtime_error("read_nvf1: truncated payload");
  return u;
}

SpectralField read_nvf1_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("read_nvf1_file: cannot open " + path);
  return read_nvf1(f);
}

}  // namespace nvlab
