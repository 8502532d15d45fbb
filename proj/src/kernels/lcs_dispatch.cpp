/* Copyright 2026 The insdel-codes Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <atomic>
#include <stdexcept>
#include <string>

#include "insdel/kernels/lcs_kernel.hpp"

namespace insdel::kernels {

namespace {

std::atomic<Impl> g_default{Impl::kAuto};

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(_M_X64) || defined(__i386__)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

}  // namespace

bool available(Impl impl) {
  switch (impl) {
    case Impl::kAuto:
    case Impl::kScalar:
      return true;
    case Impl::kAvx2:
#if defined(__x86_64__) || defined(_M_X64) || defined(__i386__)
      return cpu_has_avx2();
#else
      return false;
#endif
    case Impl::kNeon:
#if defined(__aarch64__)
      return true;
#else
      return false;
#endif
  }
  return false;
}

const char* name(Impl impl) {
  switch (impl) {
    case Impl::kAuto:
      return "auto";
    case Impl::kScalar:
      return "scalar";
    case Impl::kAvx2:
      return "avx2";
    case Impl::kNeon:
      return "neon";
  }
  return "?";
}

Impl resolve(Impl impl) {
  if (impl == Impl::kAuto) impl = g_default.load(std::memory_order_relaxed);
  if (impl != Impl::kAuto) return impl;
#if defined(__aarch64__)
  return Impl::kNeon;
#else
  return cpu_has_avx2() ? Impl::kAvx2 : Impl::kScalar;
#endif
}

LcsBatchFn select(Impl impl) {
  const Impl r = resolve(impl);
  if (!available(r))
    throw std::invalid_argument(std::string("kernel '") + name(r) +
                                "' is not available on this machine");
  switch (r) {
    case Impl::kScalar:
      return &lcs_batch_scalar;
#if defined(__x86_64__) || defined(_M_X64) || defined(__i386__)
    case Impl::kAvx2:
      return &lcs_batch_avx2;
#endif
#if defined(__aarch64__)
    case Impl::kNeon:
      return &lcs_batch_neon;
#endif
    default:
      return &lcs_batch_scalar;
  }
}

void set_default_impl(Impl impl) { g_default.store(impl, std::memory_order_relaxed); }

Impl default_impl() { return g_default.load(std::memory_order_relaxed); }

Impl impl_from_name(const char* s) {
  const std::string v(s);
  if (v == "auto") return Impl::kAuto;
  if (v == "scalar") return Impl::kScalar;
  if (v == "avx2") return Impl::kAvx2;
  if (v == "neon") return Impl::kNeon;
  throw std::invalid_argument("unknown kernel name: " + v);
}

}  // namespace insdel::kernels
