// Recorded service responses for the scripted workbench session.
// Regenerate with scripts/record_session.py against the real service.

export const FIXTURE_DOC: string = "{\n \"arguments\": [\n  {\n   \"id\": \"Acting\",\n   \"base_score\": 0.1539\n  },\n  {\n   \"id\": \"Freedom\",\n   \"base_score\": 0.08\n  },\n  {\n   \"id\": \"MerylStreep\",\n   \"base_score\": 0.07\n  },\n  {\n   \"id\": \"Movie\",\n   \"base_score\": 0.79\n  },\n  {\n   \"id\": \"Romance\",\n   \"base_score\": 0.06\n  },\n  {\n   \"id\": \"Themes\",\n   \"base_score\": 0.1221\n  },\n  {\n   \"id\": \"TomHanks\",\n   \"base_score\": 0.05\n  },\n  {\n   \"id\": \"Writing\",\n   \"base_score\": 0.02\n  }\n ],\n \"edges\": [\n  {\n   \"source\": \"Acting\",\n   \"target\": \"Movie\",\n   \"polarity\": \"support\",\n   \"weight\": 0.95\n  },\n  {\n   \"source\": \"Freedom\",\n   \"target\": \"Themes\",\n   \"polarity\": \"support\",\n   \"weight\": 0.6\n  },\n  {\n   \"source\": \"MerylStreep\",\n   \"target\": \"Acting\",\n   \"polarity\": \"support\",\n   \"weight\": 0.9\n  },\n  {\n   \"source\": \"Romance\",\n   \"target\": \"Themes\",\n   \"polarity\": \"attack\",\n   \"weight\": 0.3\n  },\n  {\n   \"source\": \"Themes\",\n   \"target\": \"Movie\",\n   \"polarity\": \"support\",\n   \"weight\": 0.7\n  },\n  {\n   \"source\": \"TomHanks\",\n   \"target\": \"Acting\",\n   \"polarity\": \"support\",\n   \"weight\": 0.8\n  },\n  {\n   \"source\": \"Writing\",\n   \"target\": \"Movie\",\n   \"polarity\": \"attack\",\n   \"weight\": 0.6\n  }\n ]\n}\n";

export const FIXTURE_STRENGTHS: string = "{\"semantics\":\"mlp\",\"strengths\":{\"Acting\":0.16779518061093648,\"Freedom\":0.080000000000000016,\"MerylStreep\":0.070000000000000021,\"Movie\":0.82636447337297969,\"Romance\":0.059999999999999998,\"Themes\":0.12535237596173995,\"TomHanks\":0.050000000000000017,\"Writing\":0.02}}\n";

export const FIXTURE_GRAES: string = "{\"semantics\":\"mlp\",\"topic\":\"Movie\",\"method\":\"approx\",\"scores\":[{\"source\":\"Acting\",\"target\":\"Movie\",\"polarity\":\"support\",\"weight\":0.94999999999999996,\"score\":0.024076284776963771},{\"source\":\"Themes\",\"target\":\"Movie\",\"polarity\":\"support\",\"weight\":0.69999999999999996,\"score\":0.017986332567776486},{\"source\":\"MerylStreep\",\"target\":\"Acting\",\"polarity\":\"support\",\"weight\":0.90000000000000002,\"score\":0.0013324216174837031},{\"source\":\"TomHanks\",\"target\":\"Acting\",\"polarity\":\"support\",\"weight\":0.80000000000000004,\"score\":0.00095172968395118563},{\"source\":\"Freedom\",\"target\":\"Themes\",\"polarity\":\"support\",\"weight\":0.59999999999999998,\"score\":0.00088097596995240213},{\"source\":\"Romance\",\"target\":\"Themes\",\"polarity\":\"attack\",\"weight\":0.29999999999999999,\"score\":-0.0006607316582751821},{\"source\":\"Writing\",\"target\":\"Movie\",\"polarity\":\"attack\",\"weight\":0.59999999999999998,\"score\":-0.0028697247911324548}],\"perturbation\":1.0000000000000001e-05}\n";

export const DEMO_DOC: string = "{\n \"arguments\": [\n  {\n   \"id\": \"Acting\",\n   \"base_score\": 0.45\n  },\n  {\n   \"id\": \"Freedom\",\n   \"base_score\": 0.08\n  },\n  {\n   \"id\": \"MerylStreep\",\n   \"base_score\": 0.07\n  },\n  {\n   \"id\": \"Movie\",\n   \"base_score\": 0.5\n  },\n  {\n   \"id\": \"Romance\",\n   \"base_score\": 0.06\n  },\n  {\n   \"id\": \"Themes\",\n   \"base_score\": 0.4\n  },\n  {\n   \"id\": \"TomHanks\",\n   \"base_score\": 0.05\n  },\n  {\n   \"id\": \"Writing\",\n   \"base_score\": 0.9\n  }\n ],\n \"edges\": [\n  {\n   \"source\": \"Acting\",\n   \"target\": \"Movie\",\n   \"polarity\": \"support\",\n   \"weight\": 0.95\n  },\n  {\n   \"source\": \"Freedom\",\n   \"target\": \"Themes\",\n   \"polarity\": \"support\",\n   \"weight\": 0.6\n  },\n  {\n   \"source\": \"MerylStreep\",\n   \"target\": \"Acting\",\n   \"polarity\": \"support\",\n   \"weight\": 0.9\n  },\n  {\n   \"source\": \"Romance\",\n   \"target\": \"Themes\",\n   \"polarity\": \"attack\",\n   \"weight\": 0.3\n  },\n  {\n   \"source\": \"Themes\",\n   \"target\": \"Movie\",\n   \"polarity\": \"support\",\n   \"weight\": 0.7\n  },\n  {\n   \"source\": \"TomHanks\",\n   \"target\": \"Acting\",\n   \"polarity\": \"support\",\n   \"weight\": 0.8\n  },\n  {\n   \"source\": \"Writing\",\n   \"target\": \"Movie\",\n   \"polarity\": \"attack\",\n   \"weight\": 0.6\n  }\n ]\n}\n";

export const SESSION_CREATE: string = "{\"id\":\"demo1\",\"created_at\":\"2026-08-10T07:18:32.073948+00:00\"}\n";

export const SESSION_DOC_0: string = "{\n \"arguments\": [\n  {\n   \"id\": \"Acting\",\n   \"base_score\": 0.45\n  },\n  {\n   \"id\": \"Freedom\",\n   \"base_score\": 0.08\n  },\n  {\n   \"id\": \"MerylStreep\",\n   \"base_score\": 0.07\n  },\n  {\n   \"id\": \"Movie\",\n   \"base_score\": 0.5\n  },\n  {\n   \"id\": \"Romance\",\n   \"base_score\": 0.06\n  },\n  {\n   \"id\": \"Themes\",\n   \"base_score\": 0.4\n  },\n  {\n   \"id\": \"TomHanks\",\n   \"base_score\": 0.05\n  },\n  {\n   \"id\": \"Writing\",\n   \"base_score\": 0.9\n  }\n ],\n \"edges\": [\n  {\n   \"source\": \"Acting\",\n   \"target\": \"Movie\",\n   \"polarity\": \"support\",\n   \"weight\": 0.95\n  },\n  {\n   \"source\": \"Freedom\",\n   \"target\": \"Themes\",\n   \"polarity\": \"support\",\n   \"weight\": 0.6\n  },\n  {\n   \"source\": \"MerylStreep\",\n   \"target\": \"Acting\",\n   \"polarity\": \"support\",\n   \"weight\": 0.9\n  },\n  {\n   \"source\": \"Romance\",\n   \"target\": \"Themes\",\n   \"polarity\": \"attack\",\n   \"weight\": 0.3\n  },\n  {\n   \"source\": \"Themes\",\n   \"target\": \"Movie\",\n   \"polarity\": \"support\",\n   \"weight\": 0.7\n  },\n  {\n   \"source\": \"TomHanks\",\n   \"target\": \"Acting\",\n   \"polarity\": \"support\",\n   \"weight\": 0.8\n  },\n  {\n   \"source\": \"Writing\",\n   \"target\": \"Movie\",\n   \"polarity\": \"attack\",\n   \"weight\": 0.6\n  }\n ]\n}\n";

export const SESSION_STRENGTHS_0: string = "{\"semantics\":\"mlp\",\"strengths\":{\"Acting\":0.4756017187999913,\"Freedom\":0.080000000000000016,\"MerylStreep\":0.070000000000000021,\"Movie\":0.54906073929203203,\"Romance\":0.059999999999999998,\"Themes\":0.40722112178935749,\"TomHanks\":0.050000000000000017,\"Writing\":0.89999999999999991}}\n";

export const SESSION_INTERVAL_0: string = "{\"semantics\":\"mlp\",\"topic\":\"Movie\",\"min\":0.28905049737499605,\"max\":0.71078254526330809}\n";

export const SESSION_GRAES_0: string = "{\"semantics\":\"mlp\",\"topic\":\"Movie\",\"method\":\"approx\",\"scores\":[{\"source\":\"Acting\",\"target\":\"Movie\",\"polarity\":\"support\",\"weight\":0.94999999999999996,\"score\":0.11775564975335938},{\"source\":\"Themes\",\"target\":\"Movie\",\"polarity\":\"support\",\"weight\":0.69999999999999996,\"score\":0.10082509692699303},{\"source\":\"MerylStreep\",\"target\":\"Acting\",\"polarity\":\"support\",\"weight\":0.90000000000000002,\"score\":0.0041064332156892647},{\"source\":\"Freedom\",\"target\":\"Themes\",\"polarity\":\"support\",\"weight\":0.59999999999999998,\"score\":0.0033469522153772853},{\"source\":\"TomHanks\",\"target\":\"Acting\",\"polarity\":\"support\",\"weight\":0.80000000000000004,\"score\":0.002933166576291057},{\"source\":\"Romance\",\"target\":\"Themes\",\"polarity\":\"attack\",\"weight\":0.29999999999999999,\"score\":-0.0025102138589971901},{\"source\":\"Writing\",\"target\":\"Movie\",\"polarity\":\"attack\",\"weight\":0.59999999999999998,\"score\":-0.22283383784849062}],\"perturbation\":1.0000000000000001e-05}\n";

export const SESSION_CURRENT_TARGET: string = "0.54906073929203203";

export const SESSION_CONTEST_CURRENT_SSE: string = "event: outcome\ndata: {\"semantics\":\"mlp\",\"status\":\"solved\",\"final_strength\":0.54906073929203203,\"iterations_used\":0,\"attempts_used\":1,\"weights\":[{\"source\":\"Acting\",\"target\":\"Movie\",\"weight\":0.94999999999999996},{\"source\":\"Freedom\",\"target\":\"Themes\",\"weight\":0.59999999999999998},{\"source\":\"MerylStreep\",\"target\":\"Acting\",\"weight\":0.90000000000000002},{\"source\":\"Romance\",\"target\":\"Themes\",\"weight\":0.29999999999999999},{\"source\":\"Themes\",\"target\":\"Movie\",\"weight\":0.69999999999999996},{\"source\":\"TomHanks\",\"target\":\"Acting\",\"weight\":0.80000000000000004},{\"source\":\"Writing\",\"target\":\"Movie\",\"weight\":0.59999999999999998}]}\n\n";

export const SESSION_CONTEST_1_SSE: string = "event: progress\ndata: {\"iteration\":1,\"strength\":0.28905049737499605}\n\nevent: progress\ndata: {\"iteration\":2,\"strength\":0.30314044115012367}\n\nevent: outcome\ndata: {\"semantics\":\"mlp\",\"status\":\"solved\",\"final_strength\":0.30314044115012367,\"iterations_used\":2,\"attempts_used\":1,\"weights\":[{\"source\":\"Acting\",\"target\":\"Movie\",\"weight\":0.02670222494158668},{\"source\":\"Freedom\",\"target\":\"Themes\",\"weight\":0.51632619461556784},{\"source\":\"MerylStreep\",\"target\":\"Acting\",\"weight\":0.79733916960776841},{\"source\":\"Romance\",\"target\":\"Themes\",\"weight\":0.36275534647492974},{\"source\":\"Themes\",\"target\":\"Movie\",\"weight\":0.02285145823767696},{\"source\":\"TomHanks\",\"target\":\"Acting\",\"weight\":0.72667083559272361},{\"source\":\"Writing\",\"target\":\"Movie\",\"weight\":0.94918113675554783}]}\n\n";

export const SESSION_PUT_1_BODY: string = "{\"weights\":[{\"source\":\"Acting\",\"target\":\"Movie\",\"weight\":0.02670222494158668},{\"source\":\"Freedom\",\"target\":\"Themes\",\"weight\":0.51632619461556784},{\"source\":\"MerylStreep\",\"target\":\"Acting\",\"weight\":0.79733916960776841},{\"source\":\"Romance\",\"target\":\"Themes\",\"weight\":0.36275534647492974},{\"source\":\"Themes\",\"target\":\"Movie\",\"weight\":0.02285145823767696},{\"source\":\"TomHanks\",\"target\":\"Acting\",\"weight\":0.72667083559272361},{\"source\":\"Writing\",\"target\":\"Movie\",\"weight\":0.94918113675554783}]}";

export const SESSION_DOC_1: string = "{\n \"arguments\": [\n  {\n   \"id\": \"Acting\",\n   \"base_score\": 0.45\n  },\n  {\n   \"id\": \"Freedom\",\n   \"base_score\": 0.08\n  },\n  {\n   \"id\": \"MerylStreep\",\n   \"base_score\": 0.07\n  },\n  {\n   \"id\": \"Movie\",\n   \"base_score\": 0.5\n  },\n  {\n   \"id\": \"Romance\",\n   \"base_score\": 0.06\n  },\n  {\n   \"id\": \"Themes\",\n   \"base_score\": 0.4\n  },\n  {\n   \"id\": \"TomHanks\",\n   \"base_score\": 0.05\n  },\n  {\n   \"id\": \"Writing\",\n   \"base_score\": 0.9\n  }\n ],\n \"edges\": [\n  {\n   \"source\": \"Acting\",\n   \"target\": \"Movie\",\n   \"polarity\": \"support\",\n   \"weight\": 0.02670222494158668\n  },\n  {\n   \"source\": \"Freedom\",\n   \"target\": \"Themes\",\n   \"polarity\": \"support\",\n   \"weight\": 0.5163261946155678\n  },\n  {\n   \"source\": \"MerylStreep\",\n   \"target\": \"Acting\",\n   \"polarity\": \"support\",\n   \"weight\": 0.7973391696077684\n  },\n  {\n   \"source\": \"Romance\",\n   \"target\": \"Themes\",\n   \"polarity\": \"attack\",\n   \"weight\": 0.36275534647492974\n  },\n  {\n   \"source\": \"Themes\",\n   \"target\": \"Movie\",\n   \"polarity\": \"support\",\n   \"weight\": 0.02285145823767696\n  },\n  {\n   \"source\": \"TomHanks\",\n   \"target\": \"Acting\",\n   \"polarity\": \"support\",\n   \"weight\": 0.7266708355927236\n  },\n  {\n   \"source\": \"Writing\",\n   \"target\": \"Movie\",\n   \"polarity\": \"attack\",\n   \"weight\": 0.9491811367555478\n  }\n ]\n}\n";

export const SESSION_STRENGTHS_1: string = "{\"semantics\":\"mlp\",\"strengths\":{\"Acting\":0.47289574314426935,\"Freedom\":0.080000000000000016,\"MerylStreep\":0.070000000000000021,\"Movie\":0.30314044115012367,\"Romance\":0.059999999999999998,\"Themes\":0.40469881828618437,\"TomHanks\":0.050000000000000017,\"Writing\":0.89999999999999991}}\n";

export const SESSION_INTERVAL_1: string = "{\"semantics\":\"mlp\",\"topic\":\"Movie\",\"min\":0.28905049737499605,\"max\":0.71078254526330809}\n";

export const SESSION_GRAES_1: string = "{\"semantics\":\"mlp\",\"topic\":\"Movie\",\"method\":\"approx\",\"scores\":[{\"source\":\"Acting\",\"target\":\"Movie\",\"polarity\":\"support\",\"weight\":0.02670222494158668,\"score\":0.099897575689400483},{\"source\":\"Themes\",\"target\":\"Movie\",\"polarity\":\"support\",\"weight\":0.02285145823767696,\"score\":0.085491201784471102},{\"source\":\"MerylStreep\",\"target\":\"Acting\",\"polarity\":\"support\",\"weight\":0.79733916960776841,\"score\":9.8422991978708283e-05},{\"source\":\"Freedom\",\"target\":\"Themes\",\"polarity\":\"support\",\"weight\":0.51632619461556784,\"score\":9.3038299286973811e-05},{\"source\":\"TomHanks\",\"target\":\"Acting\",\"polarity\":\"support\",\"weight\":0.72667083559272361,\"score\":7.0302136334632337e-05},{\"source\":\"Romance\",\"target\":\"Themes\",\"polarity\":\"attack\",\"weight\":0.36275534647492974,\"score\":-6.9778716138557684e-05},{\"source\":\"Writing\",\"target\":\"Movie\",\"polarity\":\"attack\",\"weight\":0.94918113675554783,\"score\":-0.19012134583884507}],\"perturbation\":1.0000000000000001e-05}\n";

export const SESSION_CONTEST_2_SSE: string = "event: progress\ndata: {\"iteration\":1,\"strength\":0.70635148602606657}\n\nevent: progress\ndata: {\"iteration\":2,\"strength\":0.57961014351011053}\n\nevent: progress\ndata: {\"iteration\":3,\"strength\":0.60979820068421309}\n\nevent: outcome\ndata: {\"semantics\":\"mlp\",\"status\":\"solved\",\"final_strength\":0.60979820068421309,\"iterations_used\":3,\"attempts_used\":1,\"weights\":[{\"source\":\"Acting\",\"target\":\"Movie\",\"weight\":0.82979150778086996},{\"source\":\"Freedom\",\"target\":\"Themes\",\"weight\":0.51133724132247782},{\"source\":\"MerylStreep\",\"target\":\"Acting\",\"weight\":0.79312014266011355},{\"source\":\"Romance\",\"target\":\"Themes\",\"weight\":0.36649706132383103},{\"source\":\"Themes\",\"target\":\"Movie\",\"weight\":0.85432320984442611},{\"source\":\"TomHanks\",\"target\":\"Acting\",\"weight\":0.72365724487552208},{\"source\":\"Writing\",\"target\":\"Movie\",\"weight\":0.32384869220624796}]}\n\n";

export const SESSION_PUT_2_BODY: string = "{\"weights\":[{\"source\":\"Acting\",\"target\":\"Movie\",\"weight\":0.82979150778086996},{\"source\":\"Freedom\",\"target\":\"Themes\",\"weight\":0.51133724132247782},{\"source\":\"MerylStreep\",\"target\":\"Acting\",\"weight\":0.79312014266011355},{\"source\":\"Romance\",\"target\":\"Themes\",\"weight\":0.36649706132383103},{\"source\":\"Themes\",\"target\":\"Movie\",\"weight\":0.85432320984442611},{\"source\":\"TomHanks\",\"target\":\"Acting\",\"weight\":0.72365724487552208},{\"source\":\"Writing\",\"target\":\"Movie\",\"weight\":0.32384869220624796}]}";

export const SESSION_DOC_2: string = "{\n \"arguments\": [\n  {\n   \"id\": \"Acting\",\n   \"base_score\": 0.45\n  },\n  {\n   \"id\": \"Freedom\",\n   \"base_score\": 0.08\n  },\n  {\n   \"id\": \"MerylStreep\",\n   \"base_score\": 0.07\n  },\n  {\n   \"id\": \"Movie\",\n   \"base_score\": 0.5\n  },\n  {\n   \"id\": \"Romance\",\n   \"base_score\": 0.06\n  },\n  {\n   \"id\": \"Themes\",\n   \"base_score\": 0.4\n  },\n  {\n   \"id\": \"TomHanks\",\n   \"base_score\": 0.05\n  },\n  {\n   \"id\": \"Writing\",\n   \"base_score\": 0.9\n  }\n ],\n \"edges\": [\n  {\n   \"source\": \"Acting\",\n   \"target\": \"Movie\",\n   \"polarity\": \"support\",\n   \"weight\": 0.82979150778087\n  },\n  {\n   \"source\": \"Freedom\",\n   \"target\": \"Themes\",\n   \"polarity\": \"support\",\n   \"weight\": 0.5113372413224778\n  },\n  {\n   \"source\": \"MerylStreep\",\n   \"target\": \"Acting\",\n   \"polarity\": \"support\",\n   \"weight\": 0.7931201426601135\n  },\n  {\n   \"source\": \"Romance\",\n   \"target\": \"Themes\",\n   \"polarity\": \"attack\",\n   \"weight\": 0.36649706132383103\n  },\n  {\n   \"source\": \"Themes\",\n   \"target\": \"Movie\",\n   \"polarity\": \"support\",\n   \"weight\": 0.8543232098444261\n  },\n  {\n   \"source\": \"TomHanks\",\n   \"target\": \"Acting\",\n   \"polarity\": \"support\",\n   \"weight\": 0.7236572448755221\n  },\n  {\n   \"source\": \"Writing\",\n   \"target\": \"Movie\",\n   \"polarity\": \"attack\",\n   \"weight\": 0.32384869220624796\n  }\n ]\n}\n";

export const SESSION_STRENGTHS_2: string = "{\"semantics\":\"mlp\",\"strengths\":{\"Acting\":0.47278456929268381,\"Freedom\":0.080000000000000016,\"MerylStreep\":0.070000000000000021,\"Movie\":0.60979820068421309,\"Romance\":0.059999999999999998,\"Themes\":0.40454858633673674,\"TomHanks\":0.050000000000000017,\"Writing\":0.89999999999999991}}\n";

export const SESSION_INTERVAL_2: string = "{\"semantics\":\"mlp\",\"topic\":\"Movie\",\"min\":0.28905049737499605,\"max\":0.71078254526330809}\n";

export const SESSION_GRAES_2: string = "{\"semantics\":\"mlp\",\"topic\":\"Movie\",\"method\":\"approx\",\"scores\":[{\"source\":\"Acting\",\"target\":\"Movie\",\"polarity\":\"support\",\"weight\":0.82979150778086996,\"score\":0.11249636104881942},{\"source\":\"Themes\",\"target\":\"Movie\",\"polarity\":\"support\",\"weight\":0.85432320984442611,\"score\":0.096260009729842708},{\"source\":\"Freedom\",\"target\":\"Themes\",\"polarity\":\"support\",\"weight\":0.51133724132247782,\"score\":0.0039174606447645033},{\"source\":\"MerylStreep\",\"target\":\"Acting\",\"polarity\":\"support\",\"weight\":0.79312014266011355,\"score\":0.0034450365893334829},{\"source\":\"TomHanks\",\"target\":\"Acting\",\"polarity\":\"support\",\"weight\":0.72365724487552208,\"score\":0.0024607404114362907},{\"source\":\"Romance\",\"target\":\"Themes\",\"polarity\":\"attack\",\"weight\":0.36649706132383103,\"score\":-0.0029380951893642755},{\"source\":\"Writing\",\"target\":\"Movie\",\"polarity\":\"attack\",\"weight\":0.32384869220624796,\"score\":-0.21415013123915469}],\"perturbation\":1.0000000000000001e-05}\n";

export const SESSION_CONTEST_UNATTAINABLE: string = "{\"error\":\"desired strength is not attainable\",\"attainability\":{\"semantics\":\"mlp\",\"topic\":\"Movie\",\"min\":0.28905049737499605,\"max\":0.71078254526330809}}\n";
