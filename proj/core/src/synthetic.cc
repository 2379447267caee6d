// Copyright 2026 The Trigscan Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "trigscan/synthetic.h"

#include <algorithm>
#include <random>
#include <sstream>

namespace trigscan {

std::string_view SyntheticTraitName(SyntheticTrait trait) {
  switch (trait) {
    case SyntheticTrait::kPlain:
      return "plain";
    case SyntheticTrait::kInApp:
      return "in-app";
    case SyntheticTrait::kSwitch:
      return "switch";
    case SyntheticTrait::kOutOfPackage:
      return "out-of-package";
    case SyntheticTrait::kLibrary:
      return "library";
    case SyntheticTrait::kSymbolic:
      return "symbolic";
  }
  return "plain";
}

namespace {

// Sensitive sinks used by generated programs, most frequent first.
constexpr std::string_view kSinks[] = {
    "android.telephony.SmsManager.sendTextMessage",
    "android.content.ContentResolver.delete",
    "android.os.Vibrator.vibrate",
    "java.net.URL.openConnection",
    "android.telephony.TelephonyManager.getDeviceId",
    "android.hardware.Camera.open",
    "android.media.AudioRecord.startRecording",
    "android.app.NotificationManager.notify",
    "java.io.File.mkdirs",
    "android.content.ContextWrapper.startActivity",
    "android.widget.TextView.setText",
    "android.app.Activity.finish",
};
constexpr unsigned kSinkWeights[] = {12, 10, 8, 7, 6, 5, 4, 3, 2, 2, 1, 1};

constexpr std::string_view kLibraryPackages[] = {
    "com.google.ads.mediation", "com.facebook.ads.internal", "io.card.payment",
    "com.flurry.sdk"};
constexpr std::string_view kForeignPackages[] = {
    "net.partner.tools", "org.widgetkit.core", "de.helperlib.util"};
constexpr std::string_view kSmsOps[] = {"startsWith", "equals", "contains",
                                        "endsWith"};

enum class TriggerFamily { kTime, kHour, kLocation, kSms };

class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}
  uint64_t Below(uint64_t n) { return n ? engine_() % n : 0; }
  bool Chance(unsigned percent) { return Below(100) < percent; }
  std::string_view Sink() {
    unsigned total = 0;
    for (unsigned w : kSinkWeights) total += w;
    uint64_t pick = Below(total);
    for (size_t i = 0; i < std::size(kSinks); ++i) {
      if (pick < kSinkWeights[i]) return kSinks[i];
      pick -= kSinkWeights[i];
    }
    return kSinks[0];
  }
  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

// Accumulates a method body: locals are declared up front, labels are
// numbered per method.
class Body {
 public:
  void Local(const std::string& name, const std::string& type) {
    for (const auto& [n, t] : locals_) {
      if (n == name) return;
    }
    locals_.emplace_back(name, type);
  }
  void Line(const std::string& stmt) { lines_.push_back(stmt); }
  std::string NewLabel(const std::string& stem) {
    return stem + std::to_string(labels_++);
  }
  std::string Render(const std::string& indent) const {
    std::ostringstream out;
    for (const auto& [n, t] : locals_) {
      out << indent << "local " << n << " : " << t << "\n";
    }
    for (const auto& l : lines_) out << indent << l << "\n";
    return out.str();
  }

 private:
  std::vector<std::pair<std::string, std::string>> locals_;
  std::vector<std::string> lines_;
  int labels_ = 0;
};

std::string Quote(std::string_view s) { return "\"" + std::string(s) + "\""; }

void EmitFiller(Body& body, Rng& rng) {
  const int n = static_cast<int>(rng.Below(3));
  body.Local("acc", "java.lang.String");
  body.Local("cnt", "int");
  for (int i = 0; i < n; ++i) {
    switch (rng.Below(3)) {
      case 0:
        body.Line("acc = concat(acc, " + Quote("k" + std::to_string(rng.Below(90))) +
                  ")");
        break;
      case 1:
        body.Line("cnt = cnt + " + std::to_string(1 + rng.Below(9)));
        break;
      default: {
        const std::string head = body.NewLabel("loop");
        const std::string out = body.NewLabel("loopend");
        body.Line("cnt = 0");
        body.Line(head + ": if cnt >= " + std::to_string(2 + rng.Below(8)) +
                  " goto " + out);
        body.Line("cnt = cnt + 1");
        body.Line("goto " + head);
        body.Line(out + ": acc = concat(acc, \"done\")");
        break;
      }
    }
  }
}

void EmitSinkCall(Body& body, std::string_view sink) {
  body.Local("target", "java.lang.Object");
  body.Line("call " + std::string(sink) + "(target, \"payload\")");
}

struct Trigger {
  TriggerFamily family = TriggerFamily::kTime;
  bool symbolic = false;
  std::string descriptor;  // empty for symbolic
};

// Emits a check of `trigger.family`; the satisfying branch runs `payload`.
// `intent` names the variable holding the received intent for SMS checks.
template <typename Payload>
Trigger EmitTrigger(Body& body, Rng& rng, TriggerFamily family, bool symbolic,
                    const std::string& intent, Payload payload) {
  Trigger t;
  t.family = family;
  t.symbolic = symbolic;
  const std::string fire = body.NewLabel("fire");
  const std::string skip = body.NewLabel("skip");
  std::string bound;
  if (symbolic) {
    body.Local("prefs", "android.content.SharedPreferences");
    body.Local("limit", "long");
    body.Line("limit = vcall android.content.SharedPreferences.getLong(prefs, "
              "\"deadline\")");
    bound = "limit";
  }
  switch (family) {
    case TriggerFamily::kTime: {
      body.Local("now", "long");
      body.Line("now = call java.lang.System.currentTimeMillis()");
      if (!symbolic) {
        bound = std::to_string(1600000000000LL +
                               static_cast<int64_t>(rng.Below(100000)) * 1000000) +
                "L";
        t.descriptor = "#now cmp " + bound;
      }
      body.Line("if now > " + bound + " goto " + fire);
      break;
    }
    case TriggerFamily::kHour: {
      body.Local("clock", "java.util.Date");
      body.Local("hour", "int");
      body.Line("clock = new java.util.Date()");
      body.Line("hour = vcall java.util.Date.getHours(clock)");
      if (!symbolic) {
        bound = std::to_string(2 + rng.Below(21));
        t.descriptor = "#now/#hour cmp " + bound;
      }
      body.Line("if hour >= " + bound + " goto " + fire);
      break;
    }
    case TriggerFamily::kLocation: {
      body.Local("lm", "android.location.LocationManager");
      body.Local("where", "android.location.Location");
      body.Local("lat", "int");
      body.Line("where = vcall "
                "android.location.LocationManager.getLastKnownLocation(lm, "
                "\"gps\")");
      body.Line("lat = vcall android.location.Location.getLatitude(where)");
      if (!symbolic) {
        bound = std::to_string(10 + rng.Below(70));
        t.descriptor = "#here/#latitude cmp " + bound;
      }
      body.Line("if lat > " + bound + " goto " + fire);
      break;
    }
    case TriggerFamily::kSms: {
      body.Local("msg", "android.telephony.SmsMessage");
      body.Local("text", "java.lang.String");
      body.Local("hit", "boolean");
      body.Line("msg = call android.telephony.SmsMessage.createFromPdu(" +
                intent + ")");
      body.Line("text = vcall android.telephony.SmsMessage.getMessageBody(msg)");
      const std::string_view op = kSmsOps[rng.Below(std::size(kSmsOps))];
      std::string arg;
      if (symbolic) {
        body.Local("secret", "java.lang.String");
        body.Line("secret = vcall android.content.SharedPreferences.getString("
                  "prefs, \"cmd\")");
        arg = "secret";
      } else {
        const std::string literal = "CMD" + std::to_string(rng.Below(1000));
        arg = Quote(literal);
        t.descriptor = "#sms/#body." + std::string(op) + "(" + arg + ")";
      }
      body.Line("hit = vcall java.lang.String." + std::string(op) + "(text, " +
                arg + ")");
      body.Line("if hit == 1 goto " + fire);
      break;
    }
  }
  body.Line("goto " + skip);
  body.Line(fire + ": cnt = cnt + 1");
  body.Local("cnt", "int");
  payload();
  body.Line(skip + ": cnt = cnt + 2");
  return t;
}

// A time check that guards nothing sensitive.
void EmitHarmlessCheck(Body& body, Rng& rng) {
  body.Local("tick", "long");
  body.Local("acc", "java.lang.String");
  body.Local("cnt", "int");
  const std::string fire = body.NewLabel("tickfire");
  const std::string skip = body.NewLabel("tickskip");
  body.Line("tick = call java.lang.System.currentTimeMillis()");
  body.Line("if tick > " + std::to_string(1500000000000LL + rng.Below(1000)) +
            "L goto " + fire);
  body.Line("goto " + skip);
  body.Line(fire + ": acc = concat(acc, \"late\")");
  body.Line(skip + ": cnt = cnt + 1");
}

// A null check on the last known location; post-filtered.
void EmitNullCheck(Body& body) {
  body.Local("lm2", "android.location.LocationManager");
  body.Local("last", "android.location.Location");
  body.Local("target", "java.lang.Object");
  body.Local("cnt", "int");
  const std::string skip = body.NewLabel("nonull");
  body.Line("last = vcall "
            "android.location.LocationManager.getLastKnownLocation(lm2, "
            "\"network\")");
  body.Line("if last == null goto " + skip);
  body.Line("call android.widget.TextView.setText(target, \"located\")");
  body.Line(skip + ": cnt = cnt + 1");
}

std::string Method(const std::string& signature, const Body& body) {
  return "  method " + signature + " {\n" + body.Render("    ") +
         "    return\n  }\n";
}

SyntheticProgram Generate(size_t index, Label label, SyntheticTrait trait,
                          Rng& rng) {
  SyntheticProgram p;
  p.label = label;
  p.trait = trait;
  char buf[64];
  std::snprintf(buf, sizeof buf, "synthetic/p%03zu_%s_%s.tbir", index,
                std::string(LabelName(label)).c_str(),
                std::string(SyntheticTraitName(trait)).c_str());
  p.name = buf;

  const std::string app = "com.synth.app" + std::to_string(index);
  const std::string main = app + ".Main";
  const bool planted = trait != SyntheticTrait::kPlain;
  TriggerFamily family =
      static_cast<TriggerFamily>(rng.Below(4));
  if (trait == SyntheticTrait::kSwitch && family == TriggerFamily::kSms) {
    family = TriggerFamily::kTime;
  }
  const bool sms = planted && family == TriggerFamily::kSms;
  const bool foreign = trait == SyntheticTrait::kOutOfPackage ||
                       trait == SyntheticTrait::kLibrary;
  const std::string helper_pkg =
      trait == SyntheticTrait::kLibrary
          ? std::string(kLibraryPackages[rng.Below(std::size(kLibraryPackages))])
          : std::string(
                kForeignPackages[rng.Below(std::size(kForeignPackages))]);
  const std::string helper = helper_pkg + ".Helper";
  const std::string_view sink = rng.Sink();

  std::ostringstream out;
  out << "// " << p.name << "\n";
  Trigger trigger;
  auto plant = [&](Body& body, const std::string& intent) {
    trigger = EmitTrigger(body, rng, family,
                          trait == SyntheticTrait::kSymbolic, intent,
                          [&] { EmitSinkCall(body, sink); });
  };

  // The Activity always comes first so the app package is inferred from it.
  out << "class " << main << " kind Activity {\n";
  if (trait == SyntheticTrait::kSwitch) out << "  field armed : int\n";
  {
    Body body;
    EmitFiller(body, rng);
    if (rng.Chance(40)) EmitHarmlessCheck(body, rng);
    if (trait == SyntheticTrait::kPlain && rng.Chance(60)) EmitNullCheck(body);
    if (planted && !sms && !foreign) {
      if (trait == SyntheticTrait::kSwitch) {
        trigger = EmitTrigger(body, rng, family, false, "",
                              [&] { body.Line(main + ".armed = 1"); });
      } else {
        plant(body, "");
      }
    }
    if (planted && !sms && foreign) body.Line("call " + helper + ".check()");
    EmitFiller(body, rng);
    out << Method("onCreate()", body);
  }
  if (trait == SyntheticTrait::kSwitch) {
    Body body;
    body.Local("flag", "int");
    body.Local("cnt", "int");
    const std::string skip = body.NewLabel("off");
    body.Line("flag = " + main + ".armed");
    body.Line("if flag == 0 goto " + skip);
    EmitSinkCall(body, sink);
    body.Line(skip + ": cnt = cnt + 1");
    out << Method("onResume()", body);
  }
  out << "}\n";

  if (sms) {
    out << "\nclass " << app << ".SmsReceiver kind BroadcastReceiver {\n";
    Body body;
    body.Local("cnt", "int");
    if (foreign) {
      body.Line("call " + helper + ".check(intent)");
    } else {
      plant(body, "intent");
    }
    out << Method(
        "onReceive(ctx: android.content.Context, intent: android.content.Intent)",
        body);
    out << "}\n";
  }

  if (planted && foreign) {
    out << "\nclass " << helper << " kind BasicClass {\n";
    Body body;
    body.Local("cnt", "int");
    plant(body, sms ? "intent" : "");
    EmitFiller(body, rng);
    out << Method(sms ? "check(intent: android.content.Intent)" : "check()",
                  body);
    out << "}\n";
  }

  p.text = out.str();
  if (!planted) {
    p.expected.emplace();
  } else if (!trigger.symbolic) {
    p.expected = std::vector<std::string>{trigger.descriptor};
  }
  return p;
}

std::vector<SyntheticTrait> Traits(size_t half, Label label) {
  auto share = [&](size_t parts) { return std::max<size_t>(half * parts / 20, 1); };
  std::vector<SyntheticTrait> traits;
  auto add = [&](SyntheticTrait t, size_t n) {
    for (size_t i = 0; i < n && traits.size() < half; ++i) traits.push_back(t);
  };
  if (label == Label::kMalicious) {
    add(SyntheticTrait::kOutOfPackage, share(3));
    add(SyntheticTrait::kLibrary, share(2));
    add(SyntheticTrait::kSymbolic, share(3));
    add(SyntheticTrait::kSwitch, share(2));
    add(SyntheticTrait::kInApp, half);
  } else {
    add(SyntheticTrait::kOutOfPackage, share(3));
    add(SyntheticTrait::kLibrary, share(2));
    add(SyntheticTrait::kSymbolic, share(2));
    add(SyntheticTrait::kInApp, share(4));
    add(SyntheticTrait::kPlain, half);
  }
  return traits;
}

}  // namespace

std::vector<SyntheticProgram> GenerateSyntheticCorpus(
    const SyntheticOptions& options) {
  Rng rng(options.seed);
  const size_t benign = options.programs / 2;
  const size_t malicious = options.programs - benign;
  std::vector<std::pair<Label, SyntheticTrait>> plan;
  for (auto t : Traits(benign, Label::kBenign)) plan.emplace_back(Label::kBenign, t);
  for (auto t : Traits(malicious, Label::kMalicious)) {
    plan.emplace_back(Label::kMalicious, t);
  }
  std::shuffle(plan.begin(), plan.end(), rng.engine());
  std::vector<SyntheticProgram> programs;
  for (size_t i = 0; i < plan.size(); ++i) {
    programs.push_back(Generate(i, plan[i].first, plan[i].second, rng));
  }
  return programs;
}

CorpusManifest SyntheticManifest(const std::vector<SyntheticProgram>& programs) {
  CorpusManifest manifest;
  for (const auto& p : programs) {
    ManifestEntry entry;
    entry.path = p.name;
    entry.label = p.label;
    entry.expected = p.expected;
    entry.text = p.text;
    manifest.entries.push_back(std::move(entry));
  }
  return manifest;
}

}  // namespace trigscan
