#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <ostream>
#include <string>

#include <nlohmann/json.hpp>

#include "uflip/families.hpp"
#include "uflip/involution.hpp"
#include "uflip/weyl.hpp"

namespace uflip::testing {

// Tables are expensive for F4 and B6, so every test binary shares one copy.
inline std::shared_ptr<const InvolutionTable> involutions(const std::string& type, int rank) {
  static std::mutex lock;
  static std::map<std::pair<std::string, int>, std::shared_ptr<const InvolutionTable>> cache;
  std::lock_guard<std::mutex> guard(lock);
  auto& slot = cache[{type, rank}];
  if (!slot) slot = std::make_shared<InvolutionTable>(build_families(type, rank));
  return slot;
}

inline RatPoly u() { return RatPoly::u(); }

// Fixed seed so property failures reproduce.
inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(0x5eed1234);
  return engine;
}

inline Rat random_rat(int bound = 9) {
  std::uniform_int_distribution<long> num(-bound, bound), den(1, bound);
  return Rat(num(rng()), den(rng()));
}

inline RatPoly random_poly(int max_degree = 5, int min_exponent = 0) {
  std::uniform_int_distribution<int> deg(min_exponent, max_degree);
  RatPoly p;
  const int terms = deg(rng()) - min_exponent + 1;
  for (int i = 0; i < terms; ++i) p.add_term(deg(rng()), random_rat());
  return p;
}

/// Index of the family member with the given label.
inline std::size_t member_m(const Family& f, const std::string& label) {
  for (const auto& m : f.members)
    if (m.label == label) return m.m;
  throw std::out_of_range("no member " + label);
}

/// Index of the model element with the given label.
inline std::size_t element(const FourierModel& model, const std::string& label) {
  for (std::size_t i = 0; i < model.size(); ++i)
    if (model.label(i) == label) return i;
  throw std::out_of_range("no element " + label);
}

}  // namespace uflip::testing

namespace uflip {
inline void PrintTo(const Rat& r, std::ostream* os) { *os << r.to_string(); }
inline void PrintTo(const RatPoly& p, std::ostream* os) { *os << p.to_string("q"); }
}  // namespace uflip
