window.search = Object.assign(window.search, JSON.parse('{"results_options":{"limit_results":30,"teaser_word_count":30},"search_options":{"bool":"OR","expand":true,"fields":{"body":{"boost":1},"breadcrumbs":{"boost":1},"title":{"boost":2}}},"doc_urls":["introduction.html#introduction","model.html#models-and-simulation","model.html#the-scalar-fixture-s1","model.html#structural-matrices","data.html#hankel-data-assembly","data.html#the-regressor-bank","estimators.html#the-estimators","estimators.html#the-parsim-bank","estimators.html#persistence-of-excitation","estimators.html#the-classical-projection-baseline","realization.html#balanced-realization","realization.html#extracting-the-system-matrices","realization.html#alignment-for-error-measurement","bounds.html#finite-sample-bounds","bounds.html#exact-covariate-covariance","bounds.html#snr-and-burn-in","bounds.html#error-radii","harness.html#sweeps-and-the-cli","harness.html#configuration","harness.html#command-line-interface"],"index":{"fields":["title","body","breadcrumbs"],"pipeline":["trimmer","stopWordFilter","stemmer"],"ref":"id","version":"0.9.5","index":{"body":{"root":{"docs":{},"df":0,"0":{"docs":{"1":{"tf":1.0},"17":{"tf":1.0},"19":{"tf":1.0},"2":{"tf":1.0},"3":{"tf":1.4142135623730951},"8":{"tf":1.0}},"df":6,".":{"docs":{},"df":0,"0":{"docs":{"15":{"tf":1.0}},"df":1,"5":{"docs":{"0":{"tf":1.0},"15":{"tf":2.0},"18":{"tf":1.0},"19":{"tf":1.0}},"df":4}},"1":{"docs":{"2":{"tf":1.0}},"df":1},"2":{"docs":{"7":{"tf":1.0}},"df":1,"5":{"docs":{"10":{"tf":1.0}},"df":1}},"5":{"docs":{"10":{"tf":1.4142135623730951},"17":{"tf":1.0},"2":{"tf":1.4142135623730951},"3":{"tf":1.0},"8":{"tf":1.0}},"df":5,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{"17":{"tf":1.0}},"df":1}}}}}},"0":{"docs":{},"df":0,"0":{"docs":{"14":{"tf":1.0}},"df":1}}},"1":{"docs":{"0":{"tf":1.0},"1":{"tf":1.4142135623730951},"11":{"tf":1.7320508075688772},"15":{"tf":2.0},"17":{"tf":1.0},"19":{"tf":1.0},"2":{"tf":2.0},"3":{"tf":1.0},"4":{"tf":2.0},"7":{"tf":1.0},"9":{"tf":1.4142135623730951}},"df":11,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"10":{"tf":1.0},"7":{"tf":1.0}},"df":2}}}}}}}},".":{"docs":{},"df":0,"0":{"docs":{"10":{"tf":1.0},"15":{"tf":1.0},"17":{"tf":1.0}},"df":3,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"15":{"tf":1.4142135623730951}},"df":1}}}}}}}}},"2":{"docs":{},"df":0,"5":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{"10":{"tf":1.0}},"df":1}}}}}}},"/":{"docs":{},"df":0,"n":{"docs":{},"df":0,"^":{"docs":{},"df":0,"2":{"docs":{"16":{"tf":1.0}},"df":1}}},"s":{"docs":{},"df":0,"q":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,"(":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0}},"df":1}}}}}}},"0":{"docs":{},"df":0,"0":{"docs":{"1":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.4142135623730951},"17":{"tf":1.7320508075688772}},"df":4,"0":{"docs":{"18":{"tf":1.0},"19":{"tf":1.0}},"df":2}}},"2":{"docs":{"10":{"tf":1.4142135623730951},"17":{"tf":1.0}},"df":2},"6":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{"17":{"tf":1.0}},"df":1}}},"e":{"docs":{"10":{"tf":1.4142135623730951},"17":{"tf":1.0},"7":{"tf":1.0}},"df":3}},"2":{"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.7320508075688772},"4":{"tf":1.7320508075688772},"7":{"tf":1.0}},"df":8,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{"0":{"tf":1.4142135623730951},"18":{"tf":1.0},"19":{"tf":1.0}},"df":3}}},"5":{"docs":{},"df":0,"0":{"docs":{"18":{"tf":1.0}},"df":1}}},"3":{"docs":{"0":{"tf":1.0},"15":{"tf":1.0},"19":{"tf":2.0},"4":{"tf":1.0},"7":{"tf":1.0}},"df":5,"0":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"15":{"tf":1.0}},"df":1}}}}}}}}}},"4":{"docs":{"16":{"tf":1.0}},"df":1,"0":{"docs":{"4":{"tf":1.0}},"df":1,"0":{"docs":{"17":{"tf":1.0}},"df":1,"0":{"docs":{"18":{"tf":1.0},"7":{"tf":1.0}},"df":2}}},"2":{"docs":{"0":{"tf":1.0}},"df":1}},"5":{"docs":{"18":{"tf":1.0}},"df":1,"0":{"docs":{"18":{"tf":1.0}},"df":1,"0":{"docs":{"18":{"tf":1.0},"19":{"tf":1.0}},"df":2}}},"7":{"docs":{"1":{"tf":1.4142135623730951},"18":{"tf":1.0}},"df":2},"8":{"docs":{"15":{"tf":1.0},"7":{"tf":1.0}},"df":2,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{"18":{"tf":1.0}},"df":1}}}},"9":{"docs":{"7":{"tf":1.0}},"df":1},"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"o":{"docs":{},"df":0,"v":{"docs":{"16":{"tf":1.0}},"df":1}}},"c":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{},"df":0,"t":{"docs":{"15":{"tf":1.0}},"df":1}}}}},"d":{"docs":{"17":{"tf":1.0}},"df":1},"f":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"8":{"tf":1.0}},"df":1}}}},"g":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"12":{"tf":1.0},"14":{"tf":1.0},"5":{"tf":1.0},"7":{"tf":1.0},"9":{"tf":1.0}},"df":5}}}}},"g":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"g":{"docs":{"18":{"tf":1.0}},"df":1}}}}},"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0},"12":{"tf":1.4142135623730951},"17":{"tf":1.4142135623730951}},"df":3,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"12":{"tf":1.0}},"df":1,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"y":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"m":{"docs":{"0":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}},"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{"4":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{"5":{"tf":1.0}},"df":1}}}}}},"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"g":{"docs":{},"df":0,"u":{"docs":{"4":{"tf":1.0}},"df":1}}},"y":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{"12":{"tf":1.0}},"df":1}}}}},"s":{"docs":{},"df":0,"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"8":{"tf":1.0}},"df":1}}}}},"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1}}},"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"12":{"tf":1.0}},"df":1}}},"l":{"docs":{},"df":0,"i":{"docs":{"11":{"tf":1.0},"12":{"tf":1.0},"9":{"tf":1.0}},"df":3}}}},"r":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{"4":{"tf":1.0}},"df":1}}}},"x":{"docs":{"0":{"tf":1.4142135623730951}},"df":1}},"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.0},"14":{"tf":1.0},"17":{"tf":1.0},"4":{"tf":1.0}},"df":4}}},"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,"!":{"docs":{},"df":0,"(":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,".":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"[":{"docs":{},"df":0,"0":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}}}}}}}},"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"r":{"docs":{},"df":0,".":{"docs":{},"df":0,"g":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"_":{"docs":{},"df":0,"f":{"docs":{"10":{"tf":1.0}},"df":1}}}}}}}}}}},"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,".":{"docs":{},"df":0,"s":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"p":{"docs":{"17":{"tf":1.0}},"df":1}}}}}}}},"r":{"docs":{},"df":0,".":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"_":{"docs":{},"df":0,"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"[":{"docs":{},"df":0,"0":{"docs":{"10":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}},"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,".":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"r":{"docs":{},"df":0,"_":{"docs":{},"df":0,"a":{"docs":{"0":{"tf":1.0}},"df":1}}}}}}}}}}}}},"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,".":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"_":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"u":{"docs":{},"df":0,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"q":{"docs":{"15":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}},"m":{"docs":{},"df":0,".":{"docs":{},"df":0,"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"1":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}},"s":{"docs":{},"df":0,"n":{"docs":{},"df":0,"r":{"docs":{},"df":0,"_":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"u":{"docs":{},"df":0,".":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"15":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}},"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"q":{"docs":{},"df":0,"!":{"docs":{},"df":0,"(":{"docs":{},"df":0,"b":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"k":{"docs":{},"df":0,".":{"docs":{},"df":0,"p":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"s":{"docs":{},"df":0,".":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"4":{"tf":1.0}},"df":1}}}},"[":{"docs":{},"df":0,"0":{"docs":{},"df":0,"]":{"docs":{},"df":0,".":{"docs":{},"df":0,"d":{"docs":{},"df":0,"_":{"docs":{},"df":0,"i":{"docs":{"4":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}},"c":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,".":{"docs":{},"df":0,"n":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}}}}}}}}},"h":{"docs":{},"df":0,".":{"docs":{},"df":0,"z":{"docs":{},"df":0,"_":{"docs":{},"df":0,"p":{"docs":{},"df":0,".":{"docs":{},"df":0,"n":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{"4":{"tf":1.0}},"df":1}}}}}}}}}},"t":{"docs":{},"df":0,".":{"docs":{},"df":0,"i":{"docs":{"1":{"tf":1.0}},"df":1},"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"1":{"tf":1.0}},"df":1}}}}}}}}},"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"!":{"docs":{},"df":0,"(":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{"17":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}},"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.0},"19":{"tf":1.0}},"df":2,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"2":{"docs":{"18":{"tf":1.0}},"df":1}}}}}}}}}},"u":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{"16":{"tf":1.0}},"df":1}}}}},"b":{"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.4142135623730951},"11":{"tf":1.7320508075688772},"16":{"tf":1.0},"2":{"tf":1.0}},"df":5,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{"0":{"tf":1.0},"10":{"tf":1.4142135623730951}},"df":2}}}},"n":{"docs":{},"df":0,"k":{"docs":{"4":{"tf":1.0},"5":{"tf":1.7320508075688772},"7":{"tf":1.4142135623730951},"9":{"tf":1.0}},"df":4}},"s":{"docs":{},"df":0,"e":{"docs":{"1":{"tf":1.0},"17":{"tf":1.0}},"df":2,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{"18":{"tf":1.0}},"df":1}}},"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"17":{"tf":1.0},"9":{"tf":1.4142135623730951}},"df":2}}}},"i":{"docs":{"11":{"tf":1.0},"12":{"tf":1.0}},"df":2}}},"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{"3":{"tf":1.0}},"df":1}}},"f":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"13":{"tf":1.0}},"df":1}}},"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{"8":{"tf":1.0}},"df":1}}},"t":{"docs":{},"df":0,"a":{"docs":{"16":{"tf":1.0}},"df":1,"_":{"docs":{},"df":0,"g":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"18":{"tf":1.0}},"df":1}}}}}},"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"10":{"tf":1.4142135623730951},"14":{"tf":1.0}},"df":2}}}}}},"i":{"docs":{},"df":0,"a":{"docs":{"16":{"tf":1.0},"2":{"tf":1.0}},"df":2,"s":{"docs":{"8":{"tf":1.0}},"df":1}},"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"15":{"tf":1.0}},"df":1}}}}},"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{"0":{"tf":1.0},"11":{"tf":2.0},"14":{"tf":1.0},"3":{"tf":1.4142135623730951},"4":{"tf":1.7320508075688772},"5":{"tf":1.4142135623730951},"7":{"tf":1.0}},"df":7}}}},"o":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{"10":{"tf":1.0},"12":{"tf":1.0},"16":{"tf":1.0},"18":{"tf":1.0}},"df":4}},"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"19":{"tf":1.0},"5":{"tf":1.0}},"df":7,"_":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{"16":{"tf":1.0}},"df":1}}}}}}}}}}},"u":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{},"df":0,"_":{"docs":{},"df":0,"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"k":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"s":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"4":{"tf":1.0},"7":{"tf":1.0}},"df":3}}}}}}}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"g":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"_":{"docs":{},"df":0,"b":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"k":{"docs":{"4":{"tf":1.0},"7":{"tf":1.0}},"df":2,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"h":{"docs":{"4":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}},"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"l":{"docs":{"16":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0},"15":{"tf":1.7320508075688772}},"df":2,"_":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"_":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"m":{"docs":{"15":{"tf":1.0}},"df":1}}}}}}}}}}}}}},"y":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{"10":{"tf":1.0},"18":{"tf":1.0}},"df":2}}}},"c":{"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.7320508075688772},"11":{"tf":1.7320508075688772},"16":{"tf":1.0},"2":{"tf":1.0},"3":{"tf":1.0}},"df":6,"(":{"docs":{},"df":0,"n":{"docs":{"15":{"tf":1.0}},"df":1}},"0":{"docs":{"15":{"tf":1.0}},"df":1},"a":{"docs":{"3":{"tf":1.0}},"df":1,"^":{"docs":{},"df":0,"{":{"docs":{},"df":0,"f":{"docs":{"3":{"tf":1.0}},"df":1}}},"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"8":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"g":{"docs":{},"df":0,"o":{"docs":{"0":{"tf":1.4142135623730951},"7":{"tf":1.0}},"df":2}},"l":{"docs":{},"df":0,"o":{"docs":{"0":{"tf":1.0},"14":{"tf":1.0},"17":{"tf":1.0},"19":{"tf":1.0}},"df":4}},"r":{"docs":{},"df":0,"i":{"docs":{"16":{"tf":1.0},"4":{"tf":1.0},"8":{"tf":1.0}},"df":3}}},"s":{"docs":{},"df":0,"e":{"docs":{"3":{"tf":1.0}},"df":1}},"u":{"docs":{},"df":0,"s":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.0},"5":{"tf":1.0}},"df":2}}}}},"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{"11":{"tf":1.0},"17":{"tf":1.0}},"df":2},"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{"1":{"tf":1.0},"3":{"tf":1.7320508075688772}},"df":2}}}},"p":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.0},"3":{"tf":1.0},"5":{"tf":1.0}},"df":5}}}}},"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{"1":{"tf":1.7320508075688772},"19":{"tf":1.0},"7":{"tf":1.0}},"df":3}}},"o":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{"10":{"tf":1.0},"16":{"tf":1.0}},"df":2}},"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"_":{"docs":{},"df":0,"h":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"z":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"16":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{"17":{"tf":1.0},"7":{"tf":1.0},"9":{"tf":1.4142135623730951}},"df":3}}}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"10":{"tf":1.0}},"df":1}}},"i":{"docs":{"16":{"tf":1.0},"17":{"tf":1.0}},"df":2},"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"14":{"tf":1.0},"2":{"tf":1.0}},"df":4}}}},"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0},"19":{"tf":1.0}},"df":2}},"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"13":{"tf":1.0},"17":{"tf":1.0}},"df":2}}}},"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"n":{"docs":{"11":{"tf":1.0},"4":{"tf":1.7320508075688772},"7":{"tf":1.4142135623730951}},"df":3}}}},"m":{"docs":{},"df":0,"b":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"12":{"tf":1.0},"8":{"tf":1.0}},"df":2}}},"e":{"docs":{"0":{"tf":1.0}},"df":1},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.0},"19":{"tf":1.0}},"df":2}}}},"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"12":{"tf":1.0},"5":{"tf":1.0},"9":{"tf":1.0}},"df":3}},"i":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.0}},"df":1}},"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"9":{"tf":1.0}},"df":1}}}}}},"u":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.0},"5":{"tf":1.0}},"df":4}}}},"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"12":{"tf":1.0},"15":{"tf":1.0},"18":{"tf":1.0}},"df":4}}},"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{"18":{"tf":1.0}},"df":1,".":{"docs":{},"df":0,"j":{"docs":{},"df":0,"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"19":{"tf":1.0}},"df":1}}}}},"u":{"docs":{},"df":0,"r":{"docs":{"17":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0}},"df":3}}},"r":{"docs":{},"df":0,"m":{"docs":{"15":{"tf":1.0}},"df":1}}}},"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"17":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"3":{"tf":1.0}},"df":1,"o":{"docs":{},"df":0,"r":{"docs":{"1":{"tf":1.0}},"df":1}}}}}}}},"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"u":{"docs":{"8":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"b":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.0}},"df":1}}}},"o":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0}},"df":2}}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{"16":{"tf":1.0}},"df":1}}}}},"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1,"e":{"docs":{},"df":0,"r":{"docs":{"1":{"tf":1.0}},"df":1,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{"15":{"tf":1.0},"5":{"tf":1.0}},"df":2}}}}}}}}},"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.4142135623730951},"14":{"tf":2.23606797749979},"15":{"tf":1.4142135623730951},"3":{"tf":1.0}},"df":4,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"m":{"docs":{"14":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.7320508075688772}},"df":1}}},"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"14":{"tf":1.0}},"df":1}}}},"s":{"docs":{},"df":0,"v":{"docs":{"17":{"tf":1.0}},"df":1}},"u":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.0}},"df":1}}},"d":{"docs":{},"df":0,"_":{"docs":{},"df":0,"i":{"docs":{"15":{"tf":1.0},"5":{"tf":1.0}},"df":2}},"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.0},"11":{"tf":1.0},"13":{"tf":1.4142135623730951},"15":{"tf":1.0},"17":{"tf":1.4142135623730951},"3":{"tf":1.4142135623730951},"4":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.4142135623730951}},"df":10}}},"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"y":{"docs":{"0":{"tf":1.0},"18":{"tf":1.0}},"df":2}},"i":{"docs":{},"df":0,"d":{"docs":{"13":{"tf":1.0}},"df":1}},"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{"1":{"tf":1.0}},"df":1}}}}}},"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{"3":{"tf":1.0},"8":{"tf":1.0}},"df":2}}}},"l":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{"15":{"tf":1.4142135623730951},"16":{"tf":1.4142135623730951},"18":{"tf":1.0},"19":{"tf":1.0}},"df":4}}},"n":{"docs":{},"df":0,"s":{"docs":{"9":{"tf":1.4142135623730951}},"df":1}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{"0":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0}},"df":3}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"17":{"tf":1.0}},"df":1}}}}}}}}},"v":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"10":{"tf":1.0}},"df":2}}}},"o":{"docs":{},"df":0,"n":{"docs":{"10":{"tf":1.0},"3":{"tf":1.4142135623730951}},"df":2}}}},"f":{"docs":{},"df":0,"f":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"8":{"tf":1.0}},"df":1}}}},"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{"1":{"tf":1.0},"5":{"tf":1.0}},"df":2}}}},"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{"10":{"tf":1.0}},"df":1}}}},"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"u":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"h":{"docs":{"11":{"tf":1.0}},"df":1}}}}}}}}},"v":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"15":{"tf":1.0}},"df":1}}}},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"x":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"f":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"_":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"2":{"docs":{"10":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}},"o":{"docs":{},"df":0,"c":{"docs":{"0":{"tf":1.4142135623730951}},"df":1},"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"15":{"tf":1.0}},"df":1}}},"u":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{"15":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"w":{"docs":{"1":{"tf":1.0}},"df":1}},"o":{"docs":{},"df":0,"p":{"docs":{"17":{"tf":1.0}},"df":1}}},"y":{"docs":{},"df":0,"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{"1":{"tf":1.0}},"df":1}}}}},"e":{"docs":{"1":{"tf":1.4142135623730951},"3":{"tf":1.0},"8":{"tf":1.0}},"df":3,"_":{"docs":{},"df":0,"f":{"docs":{"4":{"tf":1.0}},"df":1},"k":{"docs":{"0":{"tf":1.4142135623730951}},"df":1}},"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"10":{"tf":1.0},"17":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0},"7":{"tf":1.0}},"df":5}}},"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{"15":{"tf":1.0}},"df":1}}}}}}}},"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"i":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.4142135623730951},"15":{"tf":1.4142135623730951}},"df":2,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"5":{"tf":1.0}},"df":1}}}}}}}}}}}}}}},"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"g":{"docs":{},"df":0,"i":{"docs":{"16":{"tf":1.0}},"df":1}}}},"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"10":{"tf":1.0}},"df":1}}}},"p":{"docs":{"1":{"tf":1.4142135623730951},"8":{"tf":1.0}},"df":2},"q":{"docs":{},"df":0,"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"10":{"tf":1.0}},"df":1},"t":{"docs":{"7":{"tf":1.4142135623730951}},"df":1}}}},"r":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.4142135623730951},"12":{"tf":1.4142135623730951},"16":{"tf":1.0},"17":{"tf":1.7320508075688772},"19":{"tf":1.0},"2":{"tf":1.0},"8":{"tf":1.0}},"df":7}}}},"s":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"7":{"tf":1.0}},"df":2,"i":{"docs":{},"df":0,"m":{"docs":{"0":{"tf":1.7320508075688772},"1":{"tf":1.0},"10":{"tf":1.0},"12":{"tf":1.4142135623730951},"13":{"tf":1.0},"14":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"3":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.4142135623730951},"8":{"tf":1.0},"9":{"tf":1.4142135623730951}},"df":14,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"_":{"docs":{},"df":0,"p":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"j":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"h":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{},"df":0,"_":{"docs":{},"df":0,"b":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"k":{"docs":{"7":{"tf":1.0}},"df":1,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"b":{"docs":{},"df":0,"u":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{},"df":0,"_":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"g":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"_":{"docs":{},"df":0,"b":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"k":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"h":{"docs":{},"df":0,")":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"0":{"tf":1.0},"7":{"tf":1.0}},"df":2}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"y":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{"13":{"tf":1.0}},"df":1}}}}}},"x":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"14":{"tf":1.4142135623730951},"3":{"tf":1.4142135623730951},"5":{"tf":1.0},"8":{"tf":1.0}},"df":5,"l":{"docs":{},"df":0,"i":{"docs":{"1":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0},"5":{"tf":1.0}},"df":4}}}},"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{"1":{"tf":1.0},"2":{"tf":1.0}},"df":2}}}},"c":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"15":{"tf":1.0},"17":{"tf":1.0},"8":{"tf":1.7320508075688772}},"df":3,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"/":{"docs":{},"df":0,"s":{"docs":{},"df":0,"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{"19":{"tf":1.0}},"df":1}}}}}}}}}}}}}},"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1}}}},"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.4142135623730951},"19":{"tf":1.0}},"df":2}},"t":{"docs":{"19":{"tf":1.0}},"df":1}},"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0},"17":{"tf":1.0},"2":{"tf":1.0}},"df":3}}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.0}},"df":1,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"y":{"docs":{},"df":0,"(":{"docs":{},"df":0,"p":{"docs":{"3":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}},"o":{"docs":{},"df":0,"b":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"y":{"docs":{},"df":0,"(":{"docs":{},"df":0,"f":{"docs":{"3":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"11":{"tf":1.0},"16":{"tf":1.0}},"df":2,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"y":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{"11":{"tf":1.0}},"df":1}}}}}}}}}}}}}},"f":{"docs":{"0":{"tf":2.23606797749979},"15":{"tf":1.7320508075688772},"18":{"tf":1.0},"19":{"tf":1.4142135623730951},"4":{"tf":2.6457513110645907},"5":{"tf":1.0},"7":{"tf":2.449489742783178}},"df":7,"6":{"docs":{},"df":0,"4":{"docs":{"17":{"tf":1.0}},"df":1,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"s":{"docs":{},"df":0,"q":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{"17":{"tf":1.0}},"df":1}}}}}}}},"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"10":{"tf":1.0},"11":{"tf":1.0},"12":{"tf":1.4142135623730951},"16":{"tf":1.4142135623730951},"7":{"tf":1.0},"9":{"tf":1.0}},"df":6}}}},"i":{"docs":{},"df":0,"l":{"docs":{"17":{"tf":1.0}},"df":1,"u":{"docs":{},"df":0,"r":{"docs":{"19":{"tf":1.0},"8":{"tf":1.4142135623730951}},"df":2}}}},"l":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.0}},"df":1},"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"4":{"tf":1.0},"7":{"tf":1.0}},"df":4,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"i":{"docs":{"1":{"tf":1.0}},"df":1}}}}}}}}}}}}}}},"r":{"docs":{"15":{"tf":1.0}},"df":1}},"e":{"docs":{},"df":0,"w":{"docs":{"15":{"tf":1.0}},"df":1}},"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{"18":{"tf":1.0}},"df":1},"l":{"docs":{"4":{"tf":1.0}},"df":1}},"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.0}},"df":1}},"d":{"docs":{"12":{"tf":1.0}},"df":1},"i":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"13":{"tf":1.0}},"df":2}}},"r":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.0},"10":{"tf":1.0},"11":{"tf":1.4142135623730951},"5":{"tf":1.0},"7":{"tf":1.0}},"df":5}}},"t":{"docs":{"17":{"tf":1.4142135623730951}},"df":1,"_":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"g":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"g":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"p":{"docs":{},"df":0,"t":{"docs":{},"df":0,"s":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"17":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}},"x":{"docs":{"10":{"tf":1.0},"12":{"tf":1.0},"18":{"tf":1.0}},"df":3,"t":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{"10":{"tf":1.0},"16":{"tf":1.0},"18":{"tf":1.0},"2":{"tf":1.4142135623730951}},"df":4}}}}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{"1":{"tf":1.0},"3":{"tf":1.0}},"df":2}}},"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{"0":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"m":{"docs":{"0":{"tf":1.4142135623730951},"14":{"tf":1.0},"15":{"tf":1.0},"3":{"tf":1.0},"7":{"tf":1.0},"9":{"tf":1.0}},"df":6}},"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"15":{"tf":1.0}},"df":1}},"r":{"docs":{"0":{"tf":1.0},"11":{"tf":1.0}},"df":2}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"17":{"tf":1.0}},"df":1}}}}}}},"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{"8":{"tf":1.0}},"df":1}},"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"3":{"tf":1.0},"8":{"tf":1.0}},"df":2}}}}}},"t":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"14":{"tf":1.0},"4":{"tf":2.0},"5":{"tf":1.4142135623730951},"9":{"tf":1.0}},"df":6}}}}},"g":{"docs":{"7":{"tf":1.0}},"df":1,"_":{"docs":{},"df":0,"{":{"docs":{},"df":0,"f":{"docs":{},"df":0,",":{"docs":{},"df":0,"i":{"docs":{"7":{"tf":1.0}},"df":1}}}}},"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"8":{"tf":1.0}},"df":1}},"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{"10":{"tf":1.0}},"df":1,"^":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.0}},"df":1}},"_":{"docs":{},"df":0,"2":{"docs":{"10":{"tf":1.0}},"df":1},"f":{"docs":{"0":{"tf":1.0},"10":{"tf":1.4142135623730951},"7":{"tf":1.0},"9":{"tf":1.4142135623730951}},"df":4},"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.0},"11":{"tf":1.7320508075688772},"12":{"tf":1.0}},"df":3}}},"{":{"docs":{},"df":0,"f":{"docs":{},"df":0,",":{"docs":{},"df":0,"i":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}}},"p":{"docs":{"17":{"tf":1.0}},"df":1},"u":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{"1":{"tf":1.0}},"df":1}}}}}}},"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"1":{"tf":1.0},"3":{"tf":1.0},"8":{"tf":1.0}},"df":3}}}},"i":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"1":{"tf":1.0}},"df":1}}}},"l":{"docs":{"10":{"tf":1.0}},"df":1,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{"10":{"tf":1.0}},"df":1}}}}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{"10":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"d":{"docs":{"17":{"tf":2.23606797749979},"18":{"tf":1.0}},"df":2}},"o":{"docs":{},"df":0,"w":{"docs":{"5":{"tf":1.0}},"df":1}}},"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0},"15":{"tf":1.4142135623730951}},"df":2}}}}}},"i":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.0}},"df":1}}}},"h":{"docs":{"0":{"tf":1.0},"4":{"tf":1.0},"7":{"tf":1.0}},"df":3,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"k":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{"4":{"tf":1.4142135623730951}},"df":1}}}},"r":{"docs":{"0":{"tf":1.4142135623730951},"17":{"tf":1.0}},"df":2},"s":{"docs":{},"df":0,"h":{"docs":{"17":{"tf":1.0}},"df":1}}},"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{"15":{"tf":1.0}},"df":1}}},"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"h":{"docs":{"0":{"tf":1.7320508075688772}},"df":1}},"t":{"docs":{"8":{"tf":1.0}},"df":1}},"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{"1":{"tf":1.0},"5":{"tf":1.0}},"df":2}},"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"8":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"z":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"16":{"tf":1.0},"18":{"tf":1.0},"2":{"tf":1.0},"4":{"tf":1.4142135623730951}},"df":4}}}}}},"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"r":{"docs":{"15":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,".":{"docs":{"2":{"tf":1.0}},"df":1,"i":{"docs":{},"df":0,".":{"docs":{},"df":0,"d":{"docs":{"1":{"tf":1.0}},"df":1}}}},"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.0},"10":{"tf":1.0},"16":{"tf":1.0},"18":{"tf":1.0},"2":{"tf":1.0},"3":{"tf":1.0},"8":{"tf":1.0}},"df":7,"i":{"docs":{},"df":0,"f":{"docs":{"0":{"tf":1.0},"3":{"tf":1.0}},"df":2,"i":{"docs":{"0":{"tf":1.0},"19":{"tf":1.0}},"df":2}}}}}}},"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"5":{"tf":1.0}},"df":1,"c":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"9":{"tf":1.0}},"df":1}}}}}}},"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"s":{"docs":{"3":{"tf":1.0}},"df":1}}}}},"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"1":{"tf":1.0},"14":{"tf":1.0},"7":{"tf":1.0}},"df":3}}}}},"i":{"docs":{},"df":0,"c":{"docs":{"8":{"tf":1.0}},"df":1},"v":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{"17":{"tf":1.0}},"df":1}}}}}},"e":{"docs":{},"df":0,"q":{"docs":{},"df":0,"u":{"docs":{"15":{"tf":1.0}},"df":1}}},"f":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{"8":{"tf":1.0}},"df":1}}}}}},"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"16":{"tf":1.0}},"df":1}}}}},"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"18":{"tf":1.0}},"df":1}}},"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"v":{"docs":{"0":{"tf":1.0},"1":{"tf":1.7320508075688772},"15":{"tf":1.0},"4":{"tf":1.0}},"df":4}}},"p":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":2.0},"11":{"tf":1.0},"14":{"tf":1.4142135623730951},"3":{"tf":1.0},"5":{"tf":1.4142135623730951},"7":{"tf":1.0},"9":{"tf":1.0}},"df":7,"/":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{},"df":0,"p":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1}}}}}}},"s":{"docs":{},"df":0,"/":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{},"df":0,"p":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"4":{"tf":1.4142135623730951}},"df":1}}}}}}}}}}},"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.0},"17":{"tf":1.0}},"df":2}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.0},"12":{"tf":1.0}},"df":2}}}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{"0":{"tf":1.0},"19":{"tf":1.0}},"df":2}}}}},"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1}}}}}}},"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"19":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0},"11":{"tf":1.0}},"df":2}}},"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{"11":{"tf":1.0}},"df":1},"t":{"docs":{"11":{"tf":1.0}},"df":1}}}}},"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{"2":{"tf":1.0}},"df":1}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"17":{"tf":1.0}},"df":1}}}},"j":{"docs":{"4":{"tf":1.4142135623730951}},"df":1,"o":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"5":{"tf":1.0}},"df":1}}}},"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"18":{"tf":1.0}},"df":1}}}},"k":{"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.7320508075688772},"11":{"tf":1.7320508075688772},"14":{"tf":1.4142135623730951},"16":{"tf":1.0},"2":{"tf":1.0},"8":{"tf":1.4142135623730951}},"df":7,"c":{"docs":{"2":{"tf":1.0}},"df":1},"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{"10":{"tf":1.0}},"df":1}},"p":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"17":{"tf":1.0}},"df":3}}},"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{},"df":0,"n":{"docs":{"12":{"tf":1.0}},"df":1}}}}},"l":{"docs":{"10":{"tf":1.0}},"df":1,"^":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.0}},"df":1}},"_":{"docs":{},"df":0,"1":{"docs":{"10":{"tf":1.0}},"df":1},"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.0},"11":{"tf":1.4142135623730951}},"df":2}}},"p":{"docs":{"0":{"tf":1.0},"10":{"tf":1.4142135623730951},"7":{"tf":1.4142135623730951},"9":{"tf":1.4142135623730951}},"df":4}},"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"17":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"g":{"docs":{"0":{"tf":1.0}},"df":1,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.0}},"df":1}}}}},"s":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.0},"11":{"tf":1.7320508075688772}},"df":2}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.4142135623730951}},"df":1}},"r":{"docs":{"4":{"tf":1.0}},"df":1}}}},"e":{"docs":{},"df":0,"f":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.0}},"df":1}},"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{"4":{"tf":1.0}},"df":1}}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.0}},"df":1}}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.4142135623730951},"19":{"tf":1.0}},"df":2,"a":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"16":{"tf":1.0},"3":{"tf":1.0},"8":{"tf":1.0}},"df":4}}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"7":{"tf":1.0},"9":{"tf":1.0}},"df":2}}}},"o":{"docs":{},"df":0,"g":{"docs":{"15":{"tf":1.0},"16":{"tf":1.4142135623730951},"17":{"tf":1.4142135623730951}},"df":3,"(":{"docs":{},"df":0,"1":{"docs":{},"df":0,"/":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{"15":{"tf":1.0},"16":{"tf":1.0}},"df":2}}}}}}}}},"n":{"docs":{},"df":0,"g":{"docs":{"4":{"tf":1.0}},"df":1,"e":{"docs":{},"df":0,"r":{"docs":{"8":{"tf":1.0}},"df":1}}}},"o":{"docs":{},"df":0,"p":{"docs":{"1":{"tf":1.4142135623730951},"2":{"tf":1.0}},"df":2}},"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"3":{"tf":1.0},"5":{"tf":1.0}},"df":2}}}},"y":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"v":{"docs":{"3":{"tf":1.0}},"df":1}}}}}}}},"m":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"15":{"tf":1.0},"4":{"tf":1.0},"7":{"tf":1.0}},"df":5,".":{"docs":{},"df":0,"n":{"docs":{},"df":0,"x":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"0":{"tf":1.0}},"df":1}}}}}}}}}}}},"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{"1":{"tf":1.4142135623730951}},"df":1}}},"p":{"docs":{"0":{"tf":1.0},"4":{"tf":1.0},"7":{"tf":1.0}},"df":3}}}}}}}}}}},"a":{"docs":{},"df":0,"g":{"docs":{},"df":0,"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"u":{"docs":{},"df":0,"d":{"docs":{"10":{"tf":1.0}},"df":1}}}}}},"k":{"docs":{},"df":0,"e":{"docs":{"10":{"tf":1.0}},"df":1}},"p":{"docs":{"12":{"tf":1.0},"3":{"tf":1.0}},"df":2,"(":{"docs":{},"df":0,"|":{"docs":{},"df":0,"&":{"docs":{},"df":0,"n":{"docs":{"17":{"tf":1.0}},"df":1}}}}},"r":{"docs":{},"df":0,"g":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"1":{"tf":1.0},"15":{"tf":1.0},"17":{"tf":1.0}},"df":3}}},"k":{"docs":{},"df":0,"o":{"docs":{},"df":0,"v":{"docs":{"3":{"tf":1.0},"5":{"tf":1.0},"7":{"tf":1.4142135623730951},"9":{"tf":1.0}},"df":4}}}},"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{"0":{"tf":1.7320508075688772},"1":{"tf":1.0},"11":{"tf":1.0},"12":{"tf":1.0},"3":{"tf":1.7320508075688772},"4":{"tf":1.7320508075688772}},"df":6},"x":{"docs":{"10":{"tf":1.0},"17":{"tf":1.0},"2":{"tf":1.0},"5":{"tf":1.0},"9":{"tf":1.0}},"df":5}}}},"x":{"docs":{},"df":0,"(":{"docs":{},"df":0,"d":{"docs":{},"df":0,"_":{"docs":{},"df":0,"i":{"docs":{"8":{"tf":1.0}},"df":1}}},"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"^":{"docs":{},"df":0,"2":{"docs":{"15":{"tf":1.0}},"df":1}}}}}}}}}},"_":{"docs":{},"df":0,"i":{"docs":{"16":{"tf":1.0}},"df":1}}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{"7":{"tf":1.0}},"df":1,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{"8":{"tf":1.0}},"df":1}}}},"s":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{"12":{"tf":1.0},"15":{"tf":1.0}},"df":2}}}},"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{"17":{"tf":1.0}},"df":1}}}},"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"2":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0}},"df":5}}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{"17":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{"1":{"tf":1.0},"12":{"tf":1.0}},"df":2,"u":{"docs":{},"df":0,"m":{"docs":{"8":{"tf":1.0}},"df":1}}}},"u":{"docs":{"11":{"tf":1.4142135623730951}},"df":1}},"r":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0}},"df":1}}}},"s":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"12":{"tf":1.0}},"df":1}}}}}}},"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.0},"13":{"tf":1.0},"18":{"tf":1.7320508075688772},"19":{"tf":2.23606797749979},"3":{"tf":1.0},"5":{"tf":1.0},"8":{"tf":1.0}},"df":8,".":{"docs":{},"df":0,"j":{"docs":{},"df":0,"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"19":{"tf":1.0}},"df":1}}}}}}}},"n":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"14":{"tf":1.0},"17":{"tf":1.0},"19":{"tf":1.0}},"df":4}}},"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"13":{"tf":1.0}},"df":1}}}},"n":{"docs":{"0":{"tf":1.7320508075688772},"15":{"tf":1.7320508075688772},"16":{"tf":1.4142135623730951},"17":{"tf":1.7320508075688772},"18":{"tf":1.0},"19":{"tf":1.4142135623730951},"4":{"tf":2.0},"5":{"tf":1.0},"7":{"tf":1.4142135623730951},"8":{"tf":1.0},"9":{"tf":1.4142135623730951}},"df":11,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"0":{"tf":1.0},"4":{"tf":1.0},"7":{"tf":1.0}},"df":3}}}}}}}},"_":{"docs":{},"df":0,"g":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"18":{"tf":1.0}},"df":1}}}},"p":{"docs":{},"df":0,"e":{"docs":{"15":{"tf":2.0}},"df":1}},"x":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"10":{"tf":1.0},"16":{"tf":1.0}},"df":4}},"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"b":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"d":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"x":{"docs":{"10":{"tf":1.0}},"df":1}}}}}}}}}}}}}}},"m":{"docs":{},"df":0,"e":{"docs":{"18":{"tf":1.0}},"df":1}},"n":{"docs":{"17":{"tf":1.0}},"df":1}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"15":{"tf":1.0},"17":{"tf":1.0}},"df":2,".":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"_":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"u":{"docs":{},"df":0,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"q":{"docs":{"15":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}},"g":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{"16":{"tf":1.0}},"df":1}}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"1":{"tf":1.0},"17":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}},"df":4}}},"x":{"docs":{},"df":0,"t":{"docs":{"7":{"tf":1.0}},"df":1}}},"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"t":{"docs":{"16":{"tf":1.0},"2":{"tf":1.0}},"df":2}}}}},"o":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"15":{"tf":1.0},"3":{"tf":1.0},"8":{"tf":1.0}},"df":5,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"1":{"tf":1.0},"3":{"tf":1.0},"8":{"tf":1.0}},"df":3}}}}},"i":{"docs":{"7":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"m":{"docs":{"8":{"tf":1.0}},"df":1,"a":{"docs":{},"df":0,"l":{"docs":{"7":{"tf":1.4142135623730951}},"df":1}}}},"t":{"docs":{},"df":0,"e":{"docs":{"3":{"tf":1.0}},"df":1}}},"u":{"docs":{"5":{"tf":1.0}},"df":1,"m":{"docs":{},"df":0,"b":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"12":{"tf":1.0},"17":{"tf":1.0}},"df":2}}},"e":{"docs":{},"df":0,"r":{"docs":{"10":{"tf":1.0}},"df":1}}}},"y":{"docs":{"11":{"tf":1.0},"5":{"tf":1.0},"7":{"tf":1.0}},"df":3}},"o":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{},"df":0,"/":{"docs":{},"df":0,"s":{"docs":{},"df":0,"q":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,"(":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0}},"df":3}}}}}}}}},"b":{"docs":{},"df":0,"j":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"18":{"tf":1.0}},"df":1}}}},"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"v":{"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.0}},"df":2,"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"y":{"docs":{},"df":0,"/":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}},"c":{"docs":{},"df":0,"c":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{"5":{"tf":1.0}},"df":1}}}},"f":{"docs":{},"df":0,"f":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"8":{"tf":1.0}},"df":1}}}}},"l":{"docs":{"8":{"tf":1.0}},"df":1},"n":{"docs":{"0":{"tf":1.4142135623730951},"10":{"tf":1.0},"12":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.4142135623730951},"17":{"tf":1.0},"18":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0},"8":{"tf":1.0}},"df":10,"t":{"docs":{},"df":0,"o":{"docs":{"12":{"tf":1.0},"9":{"tf":1.0}},"df":2}}},"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"1":{"tf":1.0}},"df":1}},"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"17":{"tf":1.0}},"df":1}}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"l":{"docs":{"7":{"tf":1.0},"9":{"tf":1.0}},"df":2}}},"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0}},"df":1}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"7":{"tf":1.0}},"df":1}}}}}},"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"o":{"docs":{},"df":0,"g":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"12":{"tf":1.0},"9":{"tf":1.4142135623730951}},"df":2}}}}}}},"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"8":{"tf":1.0}},"df":1}}}},"u":{"docs":{},"df":0,"t":{"docs":{},"df":0,"/":{"docs":{},"df":0,"s":{"docs":{},"df":0,"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{"18":{"tf":1.0}},"df":1}}}}}},"p":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.0},"11":{"tf":1.4142135623730951},"14":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.4142135623730951},"3":{"tf":1.0},"8":{"tf":1.0}},"df":7,"_":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"r":{"docs":{"18":{"tf":1.0}},"df":1}}}}}}}}}},"p":{"docs":{"0":{"tf":1.7320508075688772},"1":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":2.449489742783178},"16":{"tf":1.4142135623730951},"18":{"tf":1.0},"19":{"tf":1.4142135623730951},"2":{"tf":1.0},"4":{"tf":3.0},"5":{"tf":1.4142135623730951},"7":{"tf":1.7320508075688772},"9":{"tf":2.0}},"df":12,"_":{"docs":{},"df":0,"r":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{"18":{"tf":1.4142135623730951}},"df":1}}}}},"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"r":{"docs":{"12":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0}},"df":3}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.0},"17":{"tf":1.0},"7":{"tf":1.0}},"df":3}}}},"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"17":{"tf":1.0},"3":{"tf":1.0},"5":{"tf":1.0},"7":{"tf":1.0},"9":{"tf":1.0}},"df":5}}}},"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{"0":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"19":{"tf":2.449489742783178},"7":{"tf":1.0}},"df":5,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"b":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"s":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"{":{"docs":{},"df":0,"b":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"n":{"docs":{},"df":0,"_":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"_":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{"15":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}},"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"{":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"_":{"docs":{},"df":0,"p":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"j":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"k":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"{":{"docs":{},"df":0,"b":{"docs":{},"df":0,"u":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{},"df":0,"_":{"docs":{},"df":0,"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"k":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{"4":{"tf":1.0},"7":{"tf":1.0}},"df":2}}}}}}}}}}}}}}}}}}},"r":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"{":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"_":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"g":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"g":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"p":{"docs":{"17":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}},"m":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{"1":{"tf":1.0},"15":{"tf":1.0},"4":{"tf":1.0},"7":{"tf":1.0}},"df":4}}}}}}}}}}}}}}}}}}}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"z":{"docs":{},"df":0,"e":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"s":{"docs":{},"df":0,"v":{"docs":{},"df":0,"d":{"docs":{},"df":0,"_":{"docs":{},"df":0,"r":{"docs":{"10":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}},"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0},"5":{"tf":1.0}},"df":2}}}}}},"t":{"docs":{"16":{"tf":1.0}},"df":1}},"s":{"docs":{},"df":0,"t":{"docs":{"11":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0},"18":{"tf":1.0},"2":{"tf":1.0},"3":{"tf":1.4142135623730951},"4":{"tf":2.0},"5":{"tf":1.0},"8":{"tf":1.0}},"df":10}}},"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{"15":{"tf":1.0}},"df":1}}}}}},"r":{"docs":{"0":{"tf":1.0},"17":{"tf":1.7320508075688772},"18":{"tf":1.7320508075688772},"7":{"tf":1.0}},"df":4,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"8":{"tf":1.0}},"df":1}}}},"t":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"b":{"docs":{"12":{"tf":1.0},"16":{"tf":1.0}},"df":2}}}}}},"h":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{"3":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{"16":{"tf":1.0},"8":{"tf":1.0}},"df":2}},"n":{"docs":{},"df":0,"v":{"docs":{},"df":0,"(":{"docs":{},"df":0,"[":{"docs":{},"df":0,"z":{"docs":{},"df":0,"_":{"docs":{},"df":0,"p":{"docs":{"7":{"tf":1.0}},"df":1}}}},"g":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"_":{"docs":{},"df":0,"f":{"docs":{"12":{"tf":1.0}},"df":1}}}}}}}}}},"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.4142135623730951},"17":{"tf":1.0}},"df":2}}}}}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0}},"df":1}}},"u":{"docs":{"5":{"tf":1.0}},"df":1}},"o":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"17":{"tf":1.7320508075688772},"18":{"tf":1.0}},"df":2}}},"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"13":{"tf":1.0}},"df":1}}}}}}}},"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{"4":{"tf":1.0}},"df":1}}},"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"5":{"tf":1.0}},"df":1,"o":{"docs":{},"df":0,"r":{"docs":{"1":{"tf":1.4142135623730951},"16":{"tf":1.0},"18":{"tf":1.0},"2":{"tf":1.0},"3":{"tf":1.0}},"df":5}}}}}},"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"v":{"docs":{"5":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"16":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"b":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.4142135623730951},"15":{"tf":1.0}},"df":2}}},"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{"0":{"tf":1.0},"5":{"tf":1.4142135623730951},"7":{"tf":1.0},"8":{"tf":1.0}},"df":4}}}},"c":{"docs":{},"df":0,"r":{"docs":{},"df":0,"u":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"n":{"docs":{"12":{"tf":1.0}},"df":1}}}}}}}}}}}}},"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{"3":{"tf":1.0},"9":{"tf":1.0}},"df":2,"t":{"docs":{"0":{"tf":1.4142135623730951},"7":{"tf":1.0}},"df":2}}}},"j":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"5":{"tf":1.0},"9":{"tf":1.4142135623730951}},"df":3,"o":{"docs":{},"df":0,"r":{"docs":{"9":{"tf":1.4142135623730951}},"df":1}}}}}},"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{"16":{"tf":1.0}},"df":1}}}}}},"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"u":{"docs":{},"df":0,"d":{"docs":{},"df":0,"o":{"docs":{"11":{"tf":1.0}},"df":1}}}}},"t":{"docs":{"17":{"tf":1.0}},"df":1},"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{"1":{"tf":1.0}},"df":1}}}},"q":{"docs":{},"df":0,"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{"17":{"tf":1.0}},"df":1},"t":{"docs":{},"df":0,"i":{"docs":{"13":{"tf":1.0}},"df":1}}}}}}}},"r":{"docs":{"0":{"tf":1.0},"10":{"tf":1.0}},"df":2,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"0":{"tf":1.0}},"df":1}}}}}}}},".":{"docs":{},"df":0,"l":{"docs":{},"df":0,"_":{"docs":{},"df":0,"p":{"docs":{"10":{"tf":1.0}},"df":1}}}},"a":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.4142135623730951},"12":{"tf":1.0},"16":{"tf":1.7320508075688772}},"df":3},"u":{"docs":{"17":{"tf":1.0}},"df":1,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"i":{"docs":{"16":{"tf":1.0}},"df":1}}}}}},"n":{"docs":{},"df":0,"k":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"10":{"tf":1.7320508075688772},"3":{"tf":1.0},"8":{"tf":1.4142135623730951}},"df":5}},"t":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0},"17":{"tf":1.0}},"df":2},"i":{"docs":{},"df":0,"o":{"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"15":{"tf":1.0}},"df":3}}}},"e":{"docs":{"18":{"tf":1.4142135623730951},"19":{"tf":1.0}},"df":2,"a":{"docs":{},"df":0,"d":{"docs":{"1":{"tf":1.0},"11":{"tf":1.0}},"df":2},"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"z":{"docs":{"0":{"tf":1.7320508075688772},"1":{"tf":1.0},"10":{"tf":1.4142135623730951},"17":{"tf":1.0}},"df":4,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"_":{"docs":{},"df":0,"b":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"16":{"tf":1.0}},"df":1}}}}}}}}}}},"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,".":{"docs":{},"df":0,"j":{"docs":{},"df":0,"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"19":{"tf":1.0}},"df":1}}}}}}}}}}},"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"11":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{"17":{"tf":1.0}},"df":1}},"v":{"docs":{"11":{"tf":1.0},"8":{"tf":1.0}},"df":2}},"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{"1":{"tf":1.4142135623730951},"14":{"tf":1.0},"3":{"tf":1.0}},"df":3}}}},"f":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{"15":{"tf":1.0}},"df":1}}}}}},"u":{"docs":{},"df":0,"s":{"docs":{"8":{"tf":1.0}},"df":1}}},"g":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"4":{"tf":1.0},"5":{"tf":1.0}},"df":2,"o":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.4142135623730951},"14":{"tf":1.0},"5":{"tf":1.7320508075688772},"7":{"tf":1.0},"8":{"tf":1.4142135623730951}},"df":5}}}}}},"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"8":{"tf":1.0}},"df":1}}}}},"l":{"docs":{"7":{"tf":1.0}},"df":1},"m":{"docs":{},"df":0,"o":{"docs":{},"df":0,"v":{"docs":{"9":{"tf":1.0}},"df":1}}},"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"12":{"tf":1.0},"17":{"tf":1.0},"19":{"tf":1.0},"3":{"tf":1.0},"8":{"tf":1.0}},"df":7}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{"8":{"tf":1.0}},"df":1}},"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{"17":{"tf":1.0}},"df":1}}}}}},"r":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{"10":{"tf":1.0}},"df":1}}},"s":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{"3":{"tf":1.0}},"df":1}}}},"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"9":{"tf":1.0}},"df":2}}}},"t":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"n":{"docs":{"1":{"tf":1.0},"16":{"tf":1.0},"8":{"tf":1.4142135623730951}},"df":3}}}}},"h":{"docs":{},"df":0,"o":{"docs":{},"df":0,"(":{"docs":{},"df":0,"a":{"docs":{"1":{"tf":1.4142135623730951}},"df":1}}}},"o":{"docs":{},"df":0,"b":{"docs":{},"df":0,"u":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"12":{"tf":1.0}},"df":1}}}},"u":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0}},"df":1}}}},"w":{"docs":{"0":{"tf":1.0},"11":{"tf":1.7320508075688772},"14":{"tf":1.0},"16":{"tf":1.4142135623730951},"17":{"tf":1.0},"18":{"tf":1.0},"4":{"tf":1.4142135623730951},"5":{"tf":1.7320508075688772},"7":{"tf":2.6457513110645907},"8":{"tf":1.7320508075688772},"9":{"tf":1.0}},"df":11,"s":{"docs":{},"df":0,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"s":{"docs":{},"df":0,"v":{"docs":{"18":{"tf":1.4142135623730951},"19":{"tf":1.4142135623730951}},"df":2}}}}}}},"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{"18":{"tf":1.4142135623730951}},"df":1}},"n":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"13":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0}},"df":5}}},"s":{"docs":{},"df":0,"1":{"docs":{"15":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.7320508075688772},"2":{"tf":1.4142135623730951},"3":{"tf":1.0},"8":{"tf":1.0}},"df":8},"_":{"docs":{},"df":0,"1":{"docs":{"10":{"tf":1.4142135623730951}},"df":1,"^":{"docs":{},"df":0,"{":{"docs":{},"df":0,"1":{"docs":{},"df":0,"/":{"docs":{},"df":0,"2":{"docs":{"10":{"tf":1.4142135623730951}},"df":1}}}}}}},"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{"1":{"tf":1.4142135623730951},"17":{"tf":1.0},"18":{"tf":1.0},"5":{"tf":1.0}},"df":4},"p":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.4142135623730951},"13":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.4142135623730951},"17":{"tf":1.0},"19":{"tf":1.0},"4":{"tf":1.4142135623730951}},"df":7}}},"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{"15":{"tf":1.0}},"df":1}}}}}},"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"10":{"tf":1.0},"2":{"tf":1.0},"4":{"tf":1.0}},"df":3}},"e":{"docs":{"16":{"tf":1.4142135623730951}},"df":1}}}},"e":{"docs":{},"df":0,"e":{"docs":{"3":{"tf":1.0}},"df":1,"d":{"docs":{"1":{"tf":1.7320508075688772},"15":{"tf":1.0},"17":{"tf":1.4142135623730951},"19":{"tf":1.0}},"df":4}},"l":{"docs":{},"df":0,"f":{"docs":{"15":{"tf":1.0}},"df":1}},"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"5":{"tf":1.0}},"df":1}}},"q":{"docs":{},"df":0,"u":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{"1":{"tf":1.0}},"df":1}}}}},"t":{"docs":{"0":{"tf":1.0},"8":{"tf":1.0}},"df":2}},"h":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"t":{"docs":{"11":{"tf":1.0}},"df":1}}}},"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"_":{"docs":{"1":{"tf":1.0},"2":{"tf":1.0}},"df":2,"g":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"10":{"tf":1.0}},"df":1}}},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"x":{"docs":{"8":{"tf":1.0}},"df":1}}},"n":{"docs":{},"df":0,"x":{"docs":{"16":{"tf":1.4142135623730951}},"df":1}},"u":{"docs":{"1":{"tf":1.0},"2":{"tf":1.0}},"df":2}}}},"n":{"docs":{"10":{"tf":1.0}},"df":1,"a":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.0},"15":{"tf":1.0}},"df":2}}}},"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"8":{"tf":1.0}},"df":1}}}},"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0}},"df":1}}}},"u":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.0},"1":{"tf":1.4142135623730951},"17":{"tf":1.0},"19":{"tf":1.0}},"df":4}}},"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"l":{"docs":{"5":{"tf":1.0}},"df":1},"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"10":{"tf":1.7320508075688772},"17":{"tf":1.0},"8":{"tf":1.4142135623730951}},"df":3}}}}}},"t":{"docs":{},"df":0,"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"8":{"tf":1.0}},"df":1}}}},"x":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{"15":{"tf":1.0}},"df":1}}}}}}},"z":{"docs":{},"df":0,"e":{"docs":{"16":{"tf":1.7320508075688772},"17":{"tf":1.0}},"df":2}}},"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{"17":{"tf":1.0},"18":{"tf":1.0}},"df":2}}}},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"15":{"tf":1.4142135623730951},"16":{"tf":1.0}},"df":2}}}}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"5":{"tf":1.0}},"df":1}}}},"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"p":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.4142135623730951}},"df":1}}}}},"r":{"docs":{"0":{"tf":1.0},"15":{"tf":1.4142135623730951},"16":{"tf":1.0}},"df":3,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"m":{"docs":{"15":{"tf":1.0}},"df":1}}},"_":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"u":{"docs":{"15":{"tf":1.4142135623730951}},"df":1}}}}}},"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"8":{"tf":1.0}},"df":1}},"v":{"docs":{"0":{"tf":1.0},"5":{"tf":1.0},"7":{"tf":1.4142135623730951}},"df":3,"e":{"docs":{},"df":0,"r":{"docs":{"7":{"tf":1.0},"8":{"tf":1.0}},"df":2}}}},"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{"8":{"tf":1.0}},"df":1}}}},"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"c":{"docs":{"0":{"tf":1.0}},"df":1}}}},"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{"9":{"tf":1.0}},"df":1}}},"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.0}},"df":1}}}},"q":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{},"df":0,"0":{"docs":{"16":{"tf":1.0}},"df":1}},"f":{"docs":{"16":{"tf":1.0}},"df":1}}}},"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"12":{"tf":1.0},"16":{"tf":1.0},"7":{"tf":1.0}},"df":4}}}},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{"1":{"tf":1.4142135623730951}},"df":1}},"c":{"docs":{},"df":0,"k":{"docs":{"0":{"tf":1.4142135623730951},"10":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.0},"7":{"tf":1.0}},"df":7}},"n":{"docs":{},"df":0,"d":{"docs":{"1":{"tf":1.0}},"df":1,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{"1":{"tf":1.0}},"df":1}}}}},"r":{"docs":{},"df":0,"t":{"docs":{"3":{"tf":1.0},"4":{"tf":1.4142135623730951}},"df":2}},"t":{"docs":{},"df":0,"e":{"docs":{"1":{"tf":1.4142135623730951},"11":{"tf":1.0},"14":{"tf":1.4142135623730951},"3":{"tf":1.0},"4":{"tf":1.0}},"df":5,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"k":{"docs":{"3":{"tf":1.0}},"df":1}}}}}}}}}}}}},"s":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{"1":{"tf":1.0}},"df":1,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"s":{"docs":{},"df":0,"1":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"15":{"tf":1.0},"4":{"tf":1.0},"7":{"tf":1.0}},"df":5}}}}}}}}}}}}}}},"u":{"docs":{"17":{"tf":1.0}},"df":1}}},"e":{"docs":{},"df":0,"p":{"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.0},"12":{"tf":1.0},"16":{"tf":1.0},"5":{"tf":1.4142135623730951}},"df":5}},"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{"16":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"16":{"tf":1.0},"2":{"tf":1.0}},"df":2}}}}},"r":{"docs":{},"df":0,"e":{"docs":{"1":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"1":{"tf":1.0}},"df":1}}}},"n":{"docs":{},"df":0,"g":{"docs":{"17":{"tf":1.0}},"df":1}}},"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{"1":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0},"9":{"tf":1.0}},"df":5}}}}}},"y":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{"3":{"tf":1.0}},"df":1}}}},"u":{"docs":{},"df":0,"b":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"16":{"tf":1.0}},"df":1}}}}}}},"s":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{"0":{"tf":1.4142135623730951},"4":{"tf":1.0},"9":{"tf":1.0}},"df":3}}}}},"c":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"19":{"tf":1.0}},"df":1}}}},"h":{"docs":{"16":{"tf":1.0}},"df":1}},"i":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0},"9":{"tf":1.0}},"df":4}},"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"19":{"tf":1.0}},"df":1,"y":{"docs":{},"df":0,".":{"docs":{},"df":0,"j":{"docs":{},"df":0,"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"18":{"tf":1.0},"19":{"tf":1.0}},"df":2}}}}}}}}}}},"v":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"12":{"tf":1.0},"7":{"tf":1.0}},"df":4,"_":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"z":{"docs":{"10":{"tf":1.0}},"df":1,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,".":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"_":{"docs":{},"df":0,"g":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"_":{"docs":{},"df":0,"l":{"docs":{},"df":0,"p":{"docs":{"0":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}},"g":{"docs":{},"df":0,"l":{"docs":{"10":{"tf":1.0}},"df":1}}}}}}}}}}}}}},"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{"17":{"tf":1.4142135623730951},"18":{"tf":1.0},"19":{"tf":1.4142135623730951}},"df":3,"_":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"r":{"docs":{"19":{"tf":1.0}},"df":1}}}}}}}},"y":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{"10":{"tf":1.0}},"df":1}}}}},"n":{"docs":{},"df":0,"c":{"docs":{"0":{"tf":1.0}},"df":1}},"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{"0":{"tf":1.7320508075688772},"1":{"tf":1.4142135623730951},"11":{"tf":1.0}},"df":3}}}}}},"t":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"11":{"tf":2.449489742783178},"12":{"tf":1.7320508075688772},"4":{"tf":1.0},"7":{"tf":1.0}},"df":6,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"16":{"tf":1.0},"5":{"tf":1.0}},"df":2}}}},"u":{"docs":{},"df":0,"_":{"docs":{},"df":0,"i":{"docs":{"15":{"tf":1.0}},"df":1}}}},"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{"16":{"tf":1.7320508075688772},"9":{"tf":1.0}},"df":2}},"s":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":2.0},"1":{"tf":1.0},"14":{"tf":1.0},"4":{"tf":1.0},"7":{"tf":1.0},"9":{"tf":1.0}},"df":6}}},"h":{"docs":{"5":{"tf":1.0},"7":{"tf":1.0}},"df":2,"e":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"15":{"tf":1.0}},"df":1}},"i":{"docs":{"3":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"f":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"5":{"tf":1.0}},"df":1}}}}},"t":{"docs":{},"df":0,"a":{"docs":{"8":{"tf":1.0}},"df":1,"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"_":{"docs":{},"df":0,"b":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"15":{"tf":1.0},"16":{"tf":1.0}},"df":2,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"m":{"docs":{"15":{"tf":1.4142135623730951}},"df":1}}}}}}}}}}}}}},"i":{"docs":{"7":{"tf":1.0}},"df":1}}}}},"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{"14":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"g":{"docs":{},"df":0,"h":{"docs":{"9":{"tf":1.0}},"df":1}}}}}},"i":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.7320508075688772},"14":{"tf":1.0},"15":{"tf":1.0}},"df":3}}},"o":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"z":{"docs":{"3":{"tf":1.0},"5":{"tf":1.0}},"df":2,"_":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"k":{"docs":{},"df":0,"o":{"docs":{},"df":0,"v":{"docs":{},"df":0,"(":{"docs":{},"df":0,"f":{"docs":{"3":{"tf":1.0}},"df":1}}}}}}}}}}}}}}},"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{"1":{"tf":1.0},"12":{"tf":1.0}},"df":2}}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"j":{"docs":{},"df":0,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"s":{"docs":{},"df":0,"v":{"docs":{"19":{"tf":1.0}},"df":1}}}},"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"1":{"tf":1.0},"4":{"tf":1.4142135623730951},"8":{"tf":1.0}},"df":3}}}}}}},"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"f":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{"0":{"tf":1.0},"12":{"tf":1.0}},"df":2}}}}}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"8":{"tf":1.0}},"df":1}}},"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"14":{"tf":1.0},"15":{"tf":1.0},"17":{"tf":2.6457513110645907},"18":{"tf":1.4142135623730951}},"df":4,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{"17":{"tf":1.0}},"df":1,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{"17":{"tf":1.0}},"df":1}}}}}}},"’":{"docs":{"17":{"tf":1.0}},"df":1}},"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"3":{"tf":1.0},"5":{"tf":1.0}},"df":2}}}}}}}},"u":{"docs":{},"df":0,"e":{"docs":{"12":{"tf":1.0},"7":{"tf":1.0}},"df":2,"_":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{"7":{"tf":1.0}},"df":1,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"m":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}}}}},"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.0},"10":{"tf":1.0},"16":{"tf":1.4142135623730951},"2":{"tf":1.0}},"df":4}}}},"t":{"docs":{},"df":0,"h":{"docs":{"12":{"tf":1.0},"7":{"tf":1.0}},"df":2,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}}}}},"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"n":{"docs":{"17":{"tf":1.0}},"df":1}}},"w":{"docs":{},"df":0,"o":{"docs":{"10":{"tf":1.0},"8":{"tf":1.4142135623730951}},"df":2}}},"u":{"docs":{"1":{"tf":1.4142135623730951},"4":{"tf":1.0}},"df":2,"_":{"docs":{},"df":0,"1":{"docs":{"10":{"tf":1.4142135623730951}},"df":1},"f":{"docs":{"4":{"tf":1.0},"5":{"tf":1.0},"9":{"tf":1.7320508075688772}},"df":3,"^":{"docs":{},"df":0,"t":{"docs":{"9":{"tf":1.7320508075688772}},"df":1}}},"i":{"docs":{"14":{"tf":1.0},"5":{"tf":1.0},"7":{"tf":1.0}},"df":3},"k":{"docs":{"0":{"tf":1.0},"3":{"tf":1.0},"8":{"tf":1.0}},"df":3},"p":{"docs":{"3":{"tf":1.0},"4":{"tf":1.7320508075688772}},"df":2}},"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"q":{"docs":{},"df":0,"u":{"docs":{"8":{"tf":1.0}},"df":1}},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"12":{"tf":1.0}},"df":1}}}}},"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"k":{"docs":{"9":{"tf":1.0}},"df":1}}}},"p":{"docs":{"0":{"tf":1.0},"11":{"tf":1.0}},"df":2},"s":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"10":{"tf":1.4142135623730951},"12":{"tf":1.0},"13":{"tf":1.0},"15":{"tf":1.4142135623730951},"17":{"tf":1.0},"2":{"tf":1.0},"4":{"tf":1.4142135623730951},"5":{"tf":1.0},"7":{"tf":1.7320508075688772}},"df":11}},"v":{"docs":{},"df":0,"_":{"docs":{},"df":0,"1":{"docs":{},"df":0,"^":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.4142135623730951}},"df":1}}}},"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"1":{"tf":1.0},"14":{"tf":1.0},"19":{"tf":1.0}},"df":3}},"u":{"docs":{"10":{"tf":1.4142135623730951},"17":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.4142135623730951}},"df":4}},"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"h":{"docs":{"2":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{"15":{"tf":1.0}},"df":1}}}}}},"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"<":{"docs":{},"df":0,"(":{"docs":{},"df":0,"u":{"docs":{},"df":0,"s":{"docs":{"17":{"tf":1.0}},"df":1}}}},"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"10":{"tf":1.4142135623730951}},"df":1}}}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0}},"df":1}}}}}},"w":{"docs":{},"df":0,"a":{"docs":{},"df":0,"y":{"docs":{"3":{"tf":1.0},"8":{"tf":1.0}},"df":2}},"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.0}},"df":1}},"n":{"docs":{},"df":0,"t":{"docs":{"8":{"tf":1.0}},"df":1}}},"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"10":{"tf":1.0}},"df":1}}}}},"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{"16":{"tf":1.0},"7":{"tf":1.0}},"df":2}}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{"3":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0},"8":{"tf":1.0}},"df":4}}}},"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"8":{"tf":1.0}},"df":1}}}}}},"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{"8":{"tf":1.0}},"df":1}}}}},"x":{"docs":{"1":{"tf":1.0},"9":{"tf":1.0}},"df":2,"_":{"docs":{},"df":0,"1":{"docs":{"1":{"tf":1.0},"3":{"tf":1.0}},"df":2},"k":{"docs":{"0":{"tf":1.4142135623730951},"3":{"tf":1.0},"4":{"tf":1.0}},"df":3},"{":{"docs":{},"df":0,"k":{"docs":{"4":{"tf":1.0}},"df":1,"+":{"docs":{},"df":0,"1":{"docs":{"0":{"tf":1.0}},"df":1}}}}}},"y":{"docs":{"1":{"tf":1.0},"4":{"tf":1.0}},"df":2,"_":{"docs":{},"df":0,"f":{"docs":{"4":{"tf":1.0},"5":{"tf":1.0},"9":{"tf":1.0}},"df":3},"k":{"docs":{"0":{"tf":1.0},"3":{"tf":1.0},"8":{"tf":1.0}},"df":3},"p":{"docs":{"3":{"tf":1.0},"4":{"tf":1.7320508075688772}},"df":2},"{":{"docs":{},"df":0,"f":{"docs":{},"df":0,",":{"docs":{},"df":0,"i":{"docs":{"5":{"tf":1.0},"7":{"tf":1.0}},"df":2}}},"k":{"docs":{},"df":0,"+":{"docs":{},"df":0,"1":{"docs":{"3":{"tf":1.0},"8":{"tf":1.0}},"df":2}}}}},"i":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.0},"18":{"tf":1.0},"7":{"tf":1.4142135623730951}},"df":3}}}}},"z":{"docs":{"5":{"tf":1.0}},"df":1,"^":{"docs":{},"df":0,"t":{"docs":{"5":{"tf":1.0}},"df":1}},"_":{"docs":{},"df":0,"p":{"docs":{"14":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.4142135623730951},"7":{"tf":1.0},"9":{"tf":1.0}},"df":5,"^":{"docs":{},"df":0,"t":{"docs":{"9":{"tf":1.4142135623730951}},"df":1}}}},"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{"14":{"tf":1.0},"16":{"tf":1.0},"3":{"tf":1.0},"8":{"tf":1.0}},"df":4}}}}}},"breadcrumbs":{"root":{"docs":{},"df":0,"0":{"docs":{"1":{"tf":1.0},"17":{"tf":1.0},"19":{"tf":1.0},"2":{"tf":1.0},"3":{"tf":1.4142135623730951},"8":{"tf":1.0}},"df":6,".":{"docs":{},"df":0,"0":{"docs":{"15":{"tf":1.0}},"df":1,"5":{"docs":{"0":{"tf":1.0},"15":{"tf":2.0},"18":{"tf":1.0},"19":{"tf":1.0}},"df":4}},"1":{"docs":{"2":{"tf":1.0}},"df":1},"2":{"docs":{"7":{"tf":1.0}},"df":1,"5":{"docs":{"10":{"tf":1.0}},"df":1}},"5":{"docs":{"10":{"tf":1.4142135623730951},"17":{"tf":1.0},"2":{"tf":1.4142135623730951},"3":{"tf":1.0},"8":{"tf":1.0}},"df":5,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{"17":{"tf":1.0}},"df":1}}}}}},"0":{"docs":{},"df":0,"0":{"docs":{"14":{"tf":1.0}},"df":1}}},"1":{"docs":{"0":{"tf":1.0},"1":{"tf":1.4142135623730951},"11":{"tf":1.7320508075688772},"15":{"tf":2.0},"17":{"tf":1.0},"19":{"tf":1.0},"2":{"tf":2.0},"3":{"tf":1.0},"4":{"tf":2.0},"7":{"tf":1.0},"9":{"tf":1.4142135623730951}},"df":11,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"10":{"tf":1.0},"7":{"tf":1.0}},"df":2}}}}}}}},".":{"docs":{},"df":0,"0":{"docs":{"10":{"tf":1.0},"15":{"tf":1.0},"17":{"tf":1.0}},"df":3,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"15":{"tf":1.4142135623730951}},"df":1}}}}}}}}},"2":{"docs":{},"df":0,"5":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{"10":{"tf":1.0}},"df":1}}}}}}},"/":{"docs":{},"df":0,"n":{"docs":{},"df":0,"^":{"docs":{},"df":0,"2":{"docs":{"16":{"tf":1.0}},"df":1}}},"s":{"docs":{},"df":0,"q":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,"(":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0}},"df":1}}}}}}},"0":{"docs":{},"df":0,"0":{"docs":{"1":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.4142135623730951},"17":{"tf":1.7320508075688772}},"df":4,"0":{"docs":{"18":{"tf":1.0},"19":{"tf":1.0}},"df":2}}},"2":{"docs":{"10":{"tf":1.4142135623730951},"17":{"tf":1.0}},"df":2},"6":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{"17":{"tf":1.0}},"df":1}}},"e":{"docs":{"10":{"tf":1.4142135623730951},"17":{"tf":1.0},"7":{"tf":1.0}},"df":3}},"2":{"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.7320508075688772},"4":{"tf":1.7320508075688772},"7":{"tf":1.0}},"df":8,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{"0":{"tf":1.4142135623730951},"18":{"tf":1.0},"19":{"tf":1.0}},"df":3}}},"5":{"docs":{},"df":0,"0":{"docs":{"18":{"tf":1.0}},"df":1}}},"3":{"docs":{"0":{"tf":1.0},"15":{"tf":1.0},"19":{"tf":2.0},"4":{"tf":1.0},"7":{"tf":1.0}},"df":5,"0":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"15":{"tf":1.0}},"df":1}}}}}}}}}},"4":{"docs":{"16":{"tf":1.0}},"df":1,"0":{"docs":{"4":{"tf":1.0}},"df":1,"0":{"docs":{"17":{"tf":1.0}},"df":1,"0":{"docs":{"18":{"tf":1.0},"7":{"tf":1.0}},"df":2}}},"2":{"docs":{"0":{"tf":1.0}},"df":1}},"5":{"docs":{"18":{"tf":1.0}},"df":1,"0":{"docs":{"18":{"tf":1.0}},"df":1,"0":{"docs":{"18":{"tf":1.0},"19":{"tf":1.0}},"df":2}}},"7":{"docs":{"1":{"tf":1.4142135623730951},"18":{"tf":1.0}},"df":2},"8":{"docs":{"15":{"tf":1.0},"7":{"tf":1.0}},"df":2,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{"18":{"tf":1.0}},"df":1}}}},"9":{"docs":{"7":{"tf":1.0}},"df":1},"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"o":{"docs":{},"df":0,"v":{"docs":{"16":{"tf":1.0}},"df":1}}},"c":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{},"df":0,"t":{"docs":{"15":{"tf":1.0}},"df":1}}}}},"d":{"docs":{"17":{"tf":1.0}},"df":1},"f":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"8":{"tf":1.0}},"df":1}}}},"g":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"12":{"tf":1.0},"14":{"tf":1.0},"5":{"tf":1.0},"7":{"tf":1.0},"9":{"tf":1.0}},"df":5}}}}},"g":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"g":{"docs":{"18":{"tf":1.0}},"df":1}}}}},"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0},"12":{"tf":1.7320508075688772},"17":{"tf":1.4142135623730951}},"df":3,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"12":{"tf":1.0}},"df":1,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"y":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"m":{"docs":{"0":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}},"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{"4":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{"5":{"tf":1.0}},"df":1}}}}}},"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"g":{"docs":{},"df":0,"u":{"docs":{"4":{"tf":1.0}},"df":1}}},"y":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{"12":{"tf":1.0}},"df":1}}}}},"s":{"docs":{},"df":0,"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"8":{"tf":1.0}},"df":1}}}}},"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1}}},"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"12":{"tf":1.0}},"df":1}}},"l":{"docs":{},"df":0,"i":{"docs":{"11":{"tf":1.0},"12":{"tf":1.0},"9":{"tf":1.0}},"df":3}}}},"r":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{"4":{"tf":1.0}},"df":1}}}},"x":{"docs":{"0":{"tf":1.4142135623730951}},"df":1}},"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.0},"14":{"tf":1.0},"17":{"tf":1.0},"4":{"tf":1.7320508075688772},"5":{"tf":1.0}},"df":5}}},"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,"!":{"docs":{},"df":0,"(":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,".":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"[":{"docs":{},"df":0,"0":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}}}}}}}},"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"r":{"docs":{},"df":0,".":{"docs":{},"df":0,"g":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"_":{"docs":{},"df":0,"f":{"docs":{"10":{"tf":1.0}},"df":1}}}}}}}}}}},"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,".":{"docs":{},"df":0,"s":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"p":{"docs":{"17":{"tf":1.0}},"df":1}}}}}}}},"r":{"docs":{},"df":0,".":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"_":{"docs":{},"df":0,"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"[":{"docs":{},"df":0,"0":{"docs":{"10":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}},"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,".":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"r":{"docs":{},"df":0,"_":{"docs":{},"df":0,"a":{"docs":{"0":{"tf":1.0}},"df":1}}}}}}}}}}}}},"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,".":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"_":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"u":{"docs":{},"df":0,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"q":{"docs":{"15":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}},"m":{"docs":{},"df":0,".":{"docs":{},"df":0,"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"1":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}},"s":{"docs":{},"df":0,"n":{"docs":{},"df":0,"r":{"docs":{},"df":0,"_":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"u":{"docs":{},"df":0,".":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"15":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}},"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"q":{"docs":{},"df":0,"!":{"docs":{},"df":0,"(":{"docs":{},"df":0,"b":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"k":{"docs":{},"df":0,".":{"docs":{},"df":0,"p":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"s":{"docs":{},"df":0,".":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"4":{"tf":1.0}},"df":1}}}},"[":{"docs":{},"df":0,"0":{"docs":{},"df":0,"]":{"docs":{},"df":0,".":{"docs":{},"df":0,"d":{"docs":{},"df":0,"_":{"docs":{},"df":0,"i":{"docs":{"4":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}},"c":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,".":{"docs":{},"df":0,"n":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}}}}}}}}},"h":{"docs":{},"df":0,".":{"docs":{},"df":0,"z":{"docs":{},"df":0,"_":{"docs":{},"df":0,"p":{"docs":{},"df":0,".":{"docs":{},"df":0,"n":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{"4":{"tf":1.0}},"df":1}}}}}}}}}},"t":{"docs":{},"df":0,".":{"docs":{},"df":0,"i":{"docs":{"1":{"tf":1.0}},"df":1},"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"1":{"tf":1.0}},"df":1}}}}}}}}},"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"!":{"docs":{},"df":0,"(":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{"17":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}},"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.0},"19":{"tf":1.0}},"df":2,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"2":{"docs":{"18":{"tf":1.0}},"df":1}}}}}}}}}},"u":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{"16":{"tf":1.0}},"df":1}}}}},"b":{"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.4142135623730951},"11":{"tf":1.7320508075688772},"16":{"tf":1.0},"2":{"tf":1.0}},"df":5,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{"0":{"tf":1.0},"10":{"tf":2.0},"11":{"tf":1.0},"12":{"tf":1.0}},"df":4}}}},"n":{"docs":{},"df":0,"k":{"docs":{"4":{"tf":1.0},"5":{"tf":2.0},"7":{"tf":1.7320508075688772},"9":{"tf":1.0}},"df":4}},"s":{"docs":{},"df":0,"e":{"docs":{"1":{"tf":1.0},"17":{"tf":1.0}},"df":2,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{"18":{"tf":1.0}},"df":1}}},"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"17":{"tf":1.0},"9":{"tf":1.7320508075688772}},"df":2}}}},"i":{"docs":{"11":{"tf":1.0},"12":{"tf":1.0}},"df":2}}},"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{"3":{"tf":1.0}},"df":1}}},"f":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"13":{"tf":1.0}},"df":1}}},"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{"8":{"tf":1.0}},"df":1}}},"t":{"docs":{},"df":0,"a":{"docs":{"16":{"tf":1.0}},"df":1,"_":{"docs":{},"df":0,"g":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"18":{"tf":1.0}},"df":1}}}}}},"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"10":{"tf":1.4142135623730951},"14":{"tf":1.0}},"df":2}}}}}},"i":{"docs":{},"df":0,"a":{"docs":{"16":{"tf":1.0},"2":{"tf":1.0}},"df":2,"s":{"docs":{"8":{"tf":1.0}},"df":1}},"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"15":{"tf":1.0}},"df":1}}}}},"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{"0":{"tf":1.0},"11":{"tf":2.0},"14":{"tf":1.0},"3":{"tf":1.4142135623730951},"4":{"tf":1.7320508075688772},"5":{"tf":1.4142135623730951},"7":{"tf":1.0}},"df":7}}}},"o":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{"10":{"tf":1.0},"12":{"tf":1.0},"16":{"tf":1.0},"18":{"tf":1.0}},"df":4}},"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.7320508075688772},"14":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.4142135623730951},"17":{"tf":1.0},"19":{"tf":1.0},"5":{"tf":1.0}},"df":9,"_":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{"16":{"tf":1.0}},"df":1}}}}}}}}}}},"u":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{},"df":0,"_":{"docs":{},"df":0,"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"k":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"s":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"4":{"tf":1.0},"7":{"tf":1.0}},"df":3}}}}}}}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"g":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"_":{"docs":{},"df":0,"b":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"k":{"docs":{"4":{"tf":1.0},"7":{"tf":1.0}},"df":2,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"h":{"docs":{"4":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}},"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"l":{"docs":{"16":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0},"15":{"tf":2.0}},"df":2,"_":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"_":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"m":{"docs":{"15":{"tf":1.0}},"df":1}}}}}}}}}}}}}},"y":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{"10":{"tf":1.0},"18":{"tf":1.0}},"df":2}}}},"c":{"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.7320508075688772},"11":{"tf":1.7320508075688772},"16":{"tf":1.0},"2":{"tf":1.0},"3":{"tf":1.0}},"df":6,"(":{"docs":{},"df":0,"n":{"docs":{"15":{"tf":1.0}},"df":1}},"0":{"docs":{"15":{"tf":1.0}},"df":1},"a":{"docs":{"3":{"tf":1.0}},"df":1,"^":{"docs":{},"df":0,"{":{"docs":{},"df":0,"f":{"docs":{"3":{"tf":1.0}},"df":1}}},"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"8":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"g":{"docs":{},"df":0,"o":{"docs":{"0":{"tf":1.4142135623730951},"7":{"tf":1.0}},"df":2}},"l":{"docs":{},"df":0,"o":{"docs":{"0":{"tf":1.0},"14":{"tf":1.0},"17":{"tf":1.0},"19":{"tf":1.0}},"df":4}},"r":{"docs":{},"df":0,"i":{"docs":{"16":{"tf":1.0},"4":{"tf":1.0},"8":{"tf":1.0}},"df":3}}},"s":{"docs":{},"df":0,"e":{"docs":{"3":{"tf":1.0}},"df":1}},"u":{"docs":{},"df":0,"s":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.0},"5":{"tf":1.0}},"df":2}}}}},"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{"11":{"tf":1.0},"17":{"tf":1.0}},"df":2},"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{"1":{"tf":1.0},"3":{"tf":1.7320508075688772}},"df":2}}}},"p":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.0},"3":{"tf":1.0},"5":{"tf":1.0}},"df":5}}}}},"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{"1":{"tf":1.7320508075688772},"19":{"tf":1.0},"7":{"tf":1.0}},"df":3}}},"o":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{"10":{"tf":1.0},"16":{"tf":1.0}},"df":2}},"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"_":{"docs":{},"df":0,"h":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"z":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"16":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{"17":{"tf":1.0},"7":{"tf":1.0},"9":{"tf":1.7320508075688772}},"df":3}}}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"10":{"tf":1.0}},"df":1}}},"i":{"docs":{"16":{"tf":1.0},"17":{"tf":1.7320508075688772},"18":{"tf":1.0},"19":{"tf":1.0}},"df":4},"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"14":{"tf":1.0},"2":{"tf":1.0}},"df":4}}}},"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0},"19":{"tf":1.0}},"df":2}},"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"13":{"tf":1.0},"17":{"tf":1.0}},"df":2}}}},"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"n":{"docs":{"11":{"tf":1.0},"4":{"tf":1.7320508075688772},"7":{"tf":1.4142135623730951}},"df":3}}}},"m":{"docs":{},"df":0,"b":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"12":{"tf":1.0},"8":{"tf":1.0}},"df":2}}},"e":{"docs":{"0":{"tf":1.0}},"df":1},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.0},"19":{"tf":1.4142135623730951}},"df":2}}}},"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"12":{"tf":1.0},"5":{"tf":1.0},"9":{"tf":1.0}},"df":3}},"i":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.0}},"df":1}},"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"9":{"tf":1.0}},"df":1}}}}}},"u":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.0},"5":{"tf":1.0}},"df":4}}}},"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"12":{"tf":1.0},"15":{"tf":1.0},"18":{"tf":1.0}},"df":4}}},"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{"18":{"tf":1.0}},"df":1,".":{"docs":{},"df":0,"j":{"docs":{},"df":0,"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"19":{"tf":1.0}},"df":1}}}}},"u":{"docs":{},"df":0,"r":{"docs":{"17":{"tf":1.0},"18":{"tf":1.4142135623730951},"19":{"tf":1.0}},"df":3}}},"r":{"docs":{},"df":0,"m":{"docs":{"15":{"tf":1.0}},"df":1}}}},"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"17":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"3":{"tf":1.0}},"df":1,"o":{"docs":{},"df":0,"r":{"docs":{"1":{"tf":1.0}},"df":1}}}}}}}},"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"u":{"docs":{"8":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"b":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.0}},"df":1}}}},"o":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0}},"df":2}}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{"16":{"tf":1.0}},"df":1}}}}},"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1,"e":{"docs":{},"df":0,"r":{"docs":{"1":{"tf":1.0}},"df":1,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{"15":{"tf":1.0},"5":{"tf":1.0}},"df":2}}}}}}}}},"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.4142135623730951},"14":{"tf":2.6457513110645907},"15":{"tf":1.4142135623730951},"3":{"tf":1.0}},"df":4,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"m":{"docs":{"14":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.7320508075688772}},"df":1}}},"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"14":{"tf":1.0}},"df":1}}}},"s":{"docs":{},"df":0,"v":{"docs":{"17":{"tf":1.0}},"df":1}},"u":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.0}},"df":1}}},"d":{"docs":{},"df":0,"_":{"docs":{},"df":0,"i":{"docs":{"15":{"tf":1.0},"5":{"tf":1.0}},"df":2}},"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.0},"11":{"tf":1.0},"13":{"tf":1.4142135623730951},"15":{"tf":1.0},"17":{"tf":1.4142135623730951},"3":{"tf":1.4142135623730951},"4":{"tf":1.7320508075688772},"5":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.4142135623730951}},"df":11}}},"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"y":{"docs":{"0":{"tf":1.0},"18":{"tf":1.0}},"df":2}},"i":{"docs":{},"df":0,"d":{"docs":{"13":{"tf":1.0}},"df":1}},"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{"1":{"tf":1.0}},"df":1}}}}}},"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{"3":{"tf":1.0},"8":{"tf":1.0}},"df":2}}}},"l":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{"15":{"tf":1.4142135623730951},"16":{"tf":1.4142135623730951},"18":{"tf":1.0},"19":{"tf":1.0}},"df":4}}},"n":{"docs":{},"df":0,"s":{"docs":{"9":{"tf":1.4142135623730951}},"df":1}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{"0":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0}},"df":3}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"17":{"tf":1.0}},"df":1}}}}}}}}},"v":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"10":{"tf":1.0}},"df":2}}}},"o":{"docs":{},"df":0,"n":{"docs":{"10":{"tf":1.0},"3":{"tf":1.4142135623730951}},"df":2}}}},"f":{"docs":{},"df":0,"f":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"8":{"tf":1.0}},"df":1}}}},"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{"1":{"tf":1.0},"5":{"tf":1.0}},"df":2}}}},"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{"10":{"tf":1.0}},"df":1}}}},"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"u":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"h":{"docs":{"11":{"tf":1.0}},"df":1}}}}}}}}},"v":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"15":{"tf":1.0}},"df":1}}}},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"x":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"f":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"_":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"2":{"docs":{"10":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}},"o":{"docs":{},"df":0,"c":{"docs":{"0":{"tf":1.4142135623730951}},"df":1},"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"15":{"tf":1.0}},"df":1}}},"u":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{"15":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"w":{"docs":{"1":{"tf":1.0}},"df":1}},"o":{"docs":{},"df":0,"p":{"docs":{"17":{"tf":1.0}},"df":1}}},"y":{"docs":{},"df":0,"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{"1":{"tf":1.0}},"df":1}}}}},"e":{"docs":{"1":{"tf":1.4142135623730951},"3":{"tf":1.0},"8":{"tf":1.0}},"df":3,"_":{"docs":{},"df":0,"f":{"docs":{"4":{"tf":1.0}},"df":1},"k":{"docs":{"0":{"tf":1.4142135623730951}},"df":1}},"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"10":{"tf":1.0},"17":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0},"7":{"tf":1.0}},"df":5}}},"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{"15":{"tf":1.0}},"df":1}}}}}}}},"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"i":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.4142135623730951},"15":{"tf":1.4142135623730951}},"df":2,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"5":{"tf":1.0}},"df":1}}}}}}}}}}}}}}},"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"g":{"docs":{},"df":0,"i":{"docs":{"16":{"tf":1.0}},"df":1}}}},"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"10":{"tf":1.0}},"df":1}}}},"p":{"docs":{"1":{"tf":1.4142135623730951},"8":{"tf":1.0}},"df":2},"q":{"docs":{},"df":0,"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"10":{"tf":1.0}},"df":1},"t":{"docs":{"7":{"tf":1.4142135623730951}},"df":1}}}},"r":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.4142135623730951},"12":{"tf":1.7320508075688772},"16":{"tf":1.4142135623730951},"17":{"tf":1.7320508075688772},"19":{"tf":1.0},"2":{"tf":1.0},"8":{"tf":1.0}},"df":7}}}},"s":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"7":{"tf":1.0}},"df":2,"i":{"docs":{},"df":0,"m":{"docs":{"0":{"tf":1.7320508075688772},"1":{"tf":1.0},"10":{"tf":1.0},"12":{"tf":1.4142135623730951},"13":{"tf":1.0},"14":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"3":{"tf":1.0},"6":{"tf":1.7320508075688772},"7":{"tf":1.7320508075688772},"8":{"tf":1.4142135623730951},"9":{"tf":1.7320508075688772}},"df":14,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"_":{"docs":{},"df":0,"p":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"j":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"h":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{},"df":0,"_":{"docs":{},"df":0,"b":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"k":{"docs":{"7":{"tf":1.0}},"df":1,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"b":{"docs":{},"df":0,"u":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{},"df":0,"_":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"g":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"_":{"docs":{},"df":0,"b":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"k":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"h":{"docs":{},"df":0,")":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"0":{"tf":1.0},"7":{"tf":1.0}},"df":2}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"y":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{"13":{"tf":1.0}},"df":1}}}}}},"x":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"14":{"tf":1.7320508075688772},"3":{"tf":1.4142135623730951},"5":{"tf":1.0},"8":{"tf":1.0}},"df":5,"l":{"docs":{},"df":0,"i":{"docs":{"1":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0},"5":{"tf":1.0}},"df":4}}}},"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{"1":{"tf":1.0},"2":{"tf":1.0}},"df":2}}}},"c":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"15":{"tf":1.0},"17":{"tf":1.0},"8":{"tf":2.0}},"df":3,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"/":{"docs":{},"df":0,"s":{"docs":{},"df":0,"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{"19":{"tf":1.0}},"df":1}}}}}}}}}}}}}},"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1}}}},"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.4142135623730951},"19":{"tf":1.0}},"df":2}},"t":{"docs":{"19":{"tf":1.0}},"df":1}},"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0},"17":{"tf":1.0},"2":{"tf":1.0}},"df":3}}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.0}},"df":1,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"y":{"docs":{},"df":0,"(":{"docs":{},"df":0,"p":{"docs":{"3":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}},"o":{"docs":{},"df":0,"b":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"y":{"docs":{},"df":0,"(":{"docs":{},"df":0,"f":{"docs":{"3":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"11":{"tf":1.4142135623730951},"16":{"tf":1.0}},"df":2,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"y":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{"11":{"tf":1.0}},"df":1}}}}}}}}}}}}}},"f":{"docs":{"0":{"tf":2.23606797749979},"15":{"tf":1.7320508075688772},"18":{"tf":1.0},"19":{"tf":1.4142135623730951},"4":{"tf":2.6457513110645907},"5":{"tf":1.0},"7":{"tf":2.449489742783178}},"df":7,"6":{"docs":{},"df":0,"4":{"docs":{"17":{"tf":1.0}},"df":1,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"s":{"docs":{},"df":0,"q":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{"17":{"tf":1.0}},"df":1}}}}}}}},"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"10":{"tf":1.0},"11":{"tf":1.0},"12":{"tf":1.4142135623730951},"16":{"tf":1.4142135623730951},"7":{"tf":1.0},"9":{"tf":1.0}},"df":6}}}},"i":{"docs":{},"df":0,"l":{"docs":{"17":{"tf":1.0}},"df":1,"u":{"docs":{},"df":0,"r":{"docs":{"19":{"tf":1.0},"8":{"tf":1.4142135623730951}},"df":2}}}},"l":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.0}},"df":1},"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"4":{"tf":1.0},"7":{"tf":1.0}},"df":4,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"i":{"docs":{"1":{"tf":1.0}},"df":1}}}}}}}}}}}}}}},"r":{"docs":{"15":{"tf":1.0}},"df":1}},"e":{"docs":{},"df":0,"w":{"docs":{"15":{"tf":1.0}},"df":1}},"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{"18":{"tf":1.0}},"df":1},"l":{"docs":{"4":{"tf":1.0}},"df":1}},"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.0}},"df":1}},"d":{"docs":{"12":{"tf":1.0}},"df":1},"i":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"13":{"tf":1.7320508075688772},"14":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0}},"df":5}}},"r":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.0},"10":{"tf":1.0},"11":{"tf":1.4142135623730951},"5":{"tf":1.0},"7":{"tf":1.0}},"df":5}}},"t":{"docs":{"17":{"tf":1.4142135623730951}},"df":1,"_":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"g":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"g":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"p":{"docs":{},"df":0,"t":{"docs":{},"df":0,"s":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"17":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}},"x":{"docs":{"10":{"tf":1.0},"12":{"tf":1.0},"18":{"tf":1.0}},"df":3,"t":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{"10":{"tf":1.0},"16":{"tf":1.0},"18":{"tf":1.0},"2":{"tf":1.7320508075688772}},"df":4}}}}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{"1":{"tf":1.0},"3":{"tf":1.0}},"df":2}}},"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{"0":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"m":{"docs":{"0":{"tf":1.4142135623730951},"14":{"tf":1.0},"15":{"tf":1.0},"3":{"tf":1.0},"7":{"tf":1.0},"9":{"tf":1.0}},"df":6}},"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"15":{"tf":1.0}},"df":1}},"r":{"docs":{"0":{"tf":1.0},"11":{"tf":1.0}},"df":2}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"17":{"tf":1.0}},"df":1}}}}}}},"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{"8":{"tf":1.0}},"df":1}},"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"3":{"tf":1.0},"8":{"tf":1.0}},"df":2}}}}}},"t":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"14":{"tf":1.0},"4":{"tf":2.0},"5":{"tf":1.4142135623730951},"9":{"tf":1.0}},"df":6}}}}},"g":{"docs":{"7":{"tf":1.0}},"df":1,"_":{"docs":{},"df":0,"{":{"docs":{},"df":0,"f":{"docs":{},"df":0,",":{"docs":{},"df":0,"i":{"docs":{"7":{"tf":1.0}},"df":1}}}}},"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"8":{"tf":1.0}},"df":1}},"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{"10":{"tf":1.0}},"df":1,"^":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.0}},"df":1}},"_":{"docs":{},"df":0,"2":{"docs":{"10":{"tf":1.0}},"df":1},"f":{"docs":{"0":{"tf":1.0},"10":{"tf":1.4142135623730951},"7":{"tf":1.0},"9":{"tf":1.4142135623730951}},"df":4},"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.0},"11":{"tf":1.7320508075688772},"12":{"tf":1.0}},"df":3}}},"{":{"docs":{},"df":0,"f":{"docs":{},"df":0,",":{"docs":{},"df":0,"i":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}}},"p":{"docs":{"17":{"tf":1.0}},"df":1},"u":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{"1":{"tf":1.0}},"df":1}}}}}}},"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"1":{"tf":1.0},"3":{"tf":1.0},"8":{"tf":1.0}},"df":3}}}},"i":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"1":{"tf":1.0}},"df":1}}}},"l":{"docs":{"10":{"tf":1.0}},"df":1,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{"10":{"tf":1.0}},"df":1}}}}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{"10":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"d":{"docs":{"17":{"tf":2.23606797749979},"18":{"tf":1.0}},"df":2}},"o":{"docs":{},"df":0,"w":{"docs":{"5":{"tf":1.0}},"df":1}}},"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0},"15":{"tf":1.4142135623730951}},"df":2}}}}}},"i":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.0}},"df":1}}}},"h":{"docs":{"0":{"tf":1.0},"4":{"tf":1.0},"7":{"tf":1.0}},"df":3,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"k":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{"4":{"tf":2.0},"5":{"tf":1.0}},"df":2}}}},"r":{"docs":{"0":{"tf":1.4142135623730951},"17":{"tf":1.0}},"df":2},"s":{"docs":{},"df":0,"h":{"docs":{"17":{"tf":1.0}},"df":1}}},"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{"15":{"tf":1.0}},"df":1}}},"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"h":{"docs":{"0":{"tf":1.7320508075688772}},"df":1}},"t":{"docs":{"8":{"tf":1.0}},"df":1}},"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{"1":{"tf":1.0},"5":{"tf":1.0}},"df":2}},"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"8":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"z":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"16":{"tf":1.0},"18":{"tf":1.0},"2":{"tf":1.0},"4":{"tf":1.4142135623730951}},"df":4}}}}}},"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"r":{"docs":{"15":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,".":{"docs":{"2":{"tf":1.0}},"df":1,"i":{"docs":{},"df":0,".":{"docs":{},"df":0,"d":{"docs":{"1":{"tf":1.0}},"df":1}}}},"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.0},"10":{"tf":1.0},"16":{"tf":1.0},"18":{"tf":1.0},"2":{"tf":1.0},"3":{"tf":1.0},"8":{"tf":1.0}},"df":7,"i":{"docs":{},"df":0,"f":{"docs":{"0":{"tf":1.0},"3":{"tf":1.0}},"df":2,"i":{"docs":{"0":{"tf":1.0},"19":{"tf":1.0}},"df":2}}}}}}},"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"5":{"tf":1.0}},"df":1,"c":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"9":{"tf":1.0}},"df":1}}}}}}},"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"s":{"docs":{"3":{"tf":1.0}},"df":1}}}}},"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"1":{"tf":1.0},"14":{"tf":1.0},"7":{"tf":1.0}},"df":3}}}}},"i":{"docs":{},"df":0,"c":{"docs":{"8":{"tf":1.0}},"df":1},"v":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{"17":{"tf":1.0}},"df":1}}}}}},"e":{"docs":{},"df":0,"q":{"docs":{},"df":0,"u":{"docs":{"15":{"tf":1.0}},"df":1}}},"f":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{"8":{"tf":1.0}},"df":1}}}}}},"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"16":{"tf":1.0}},"df":1}}}}},"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"18":{"tf":1.0}},"df":1}}},"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"v":{"docs":{"0":{"tf":1.0},"1":{"tf":1.7320508075688772},"15":{"tf":1.0},"4":{"tf":1.0}},"df":4}}},"p":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":2.0},"11":{"tf":1.0},"14":{"tf":1.4142135623730951},"3":{"tf":1.0},"5":{"tf":1.4142135623730951},"7":{"tf":1.0},"9":{"tf":1.0}},"df":7,"/":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{},"df":0,"p":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1}}}}}}},"s":{"docs":{},"df":0,"/":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{},"df":0,"p":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"4":{"tf":1.4142135623730951}},"df":1}}}}}}}}}}},"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.0},"17":{"tf":1.0}},"df":2}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.0},"12":{"tf":1.0}},"df":2}}}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{"0":{"tf":1.0},"19":{"tf":1.4142135623730951}},"df":2}}}}},"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.7320508075688772}},"df":1}}}}}}},"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"19":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0},"11":{"tf":1.0}},"df":2}}},"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{"11":{"tf":1.0}},"df":1},"t":{"docs":{"11":{"tf":1.0}},"df":1}}}}},"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{"2":{"tf":1.0}},"df":1}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"17":{"tf":1.0}},"df":1}}}},"j":{"docs":{"4":{"tf":1.4142135623730951}},"df":1,"o":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"5":{"tf":1.0}},"df":1}}}},"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"18":{"tf":1.0}},"df":1}}}},"k":{"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.7320508075688772},"11":{"tf":1.7320508075688772},"14":{"tf":1.4142135623730951},"16":{"tf":1.0},"2":{"tf":1.0},"8":{"tf":1.4142135623730951}},"df":7,"c":{"docs":{"2":{"tf":1.0}},"df":1},"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{"10":{"tf":1.0}},"df":1}},"p":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"17":{"tf":1.0}},"df":3}}},"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{},"df":0,"n":{"docs":{"12":{"tf":1.0}},"df":1}}}}},"l":{"docs":{"10":{"tf":1.0}},"df":1,"^":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.0}},"df":1}},"_":{"docs":{},"df":0,"1":{"docs":{"10":{"tf":1.0}},"df":1},"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.0},"11":{"tf":1.4142135623730951}},"df":2}}},"p":{"docs":{"0":{"tf":1.0},"10":{"tf":1.4142135623730951},"7":{"tf":1.4142135623730951},"9":{"tf":1.4142135623730951}},"df":4}},"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"17":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"g":{"docs":{"0":{"tf":1.0}},"df":1,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.0}},"df":1}}}}},"s":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.0},"11":{"tf":1.7320508075688772}},"df":2}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.4142135623730951}},"df":1}},"r":{"docs":{"4":{"tf":1.0}},"df":1}}}},"e":{"docs":{},"df":0,"f":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.0}},"df":1}},"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{"4":{"tf":1.0}},"df":1}}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.0}},"df":1}}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.4142135623730951},"19":{"tf":1.4142135623730951}},"df":2,"a":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"16":{"tf":1.0},"3":{"tf":1.0},"8":{"tf":1.0}},"df":4}}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"7":{"tf":1.0},"9":{"tf":1.0}},"df":2}}}},"o":{"docs":{},"df":0,"g":{"docs":{"15":{"tf":1.0},"16":{"tf":1.4142135623730951},"17":{"tf":1.4142135623730951}},"df":3,"(":{"docs":{},"df":0,"1":{"docs":{},"df":0,"/":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{"15":{"tf":1.0},"16":{"tf":1.0}},"df":2}}}}}}}}},"n":{"docs":{},"df":0,"g":{"docs":{"4":{"tf":1.0}},"df":1,"e":{"docs":{},"df":0,"r":{"docs":{"8":{"tf":1.0}},"df":1}}}},"o":{"docs":{},"df":0,"p":{"docs":{"1":{"tf":1.4142135623730951},"2":{"tf":1.0}},"df":2}},"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"3":{"tf":1.0},"5":{"tf":1.0}},"df":2}}}},"y":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"v":{"docs":{"3":{"tf":1.0}},"df":1}}}}}}}},"m":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"15":{"tf":1.0},"4":{"tf":1.0},"7":{"tf":1.0}},"df":5,".":{"docs":{},"df":0,"n":{"docs":{},"df":0,"x":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"0":{"tf":1.0}},"df":1}}}}}}}}}}}},"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{"1":{"tf":1.4142135623730951}},"df":1}}},"p":{"docs":{"0":{"tf":1.0},"4":{"tf":1.0},"7":{"tf":1.0}},"df":3}}}}}}}}}}},"a":{"docs":{},"df":0,"g":{"docs":{},"df":0,"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"u":{"docs":{},"df":0,"d":{"docs":{"10":{"tf":1.0}},"df":1}}}}}},"k":{"docs":{},"df":0,"e":{"docs":{"10":{"tf":1.0}},"df":1}},"p":{"docs":{"12":{"tf":1.0},"3":{"tf":1.0}},"df":2,"(":{"docs":{},"df":0,"|":{"docs":{},"df":0,"&":{"docs":{},"df":0,"n":{"docs":{"17":{"tf":1.0}},"df":1}}}}},"r":{"docs":{},"df":0,"g":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"1":{"tf":1.0},"15":{"tf":1.0},"17":{"tf":1.0}},"df":3}}},"k":{"docs":{},"df":0,"o":{"docs":{},"df":0,"v":{"docs":{"3":{"tf":1.0},"5":{"tf":1.0},"7":{"tf":1.4142135623730951},"9":{"tf":1.0}},"df":4}}}},"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{"0":{"tf":1.7320508075688772},"1":{"tf":1.0},"11":{"tf":1.4142135623730951},"12":{"tf":1.0},"3":{"tf":2.0},"4":{"tf":1.7320508075688772}},"df":6},"x":{"docs":{"10":{"tf":1.0},"17":{"tf":1.0},"2":{"tf":1.0},"5":{"tf":1.0},"9":{"tf":1.0}},"df":5}}}},"x":{"docs":{},"df":0,"(":{"docs":{},"df":0,"d":{"docs":{},"df":0,"_":{"docs":{},"df":0,"i":{"docs":{"8":{"tf":1.0}},"df":1}}},"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"^":{"docs":{},"df":0,"2":{"docs":{"15":{"tf":1.0}},"df":1}}}}}}}}}},"_":{"docs":{},"df":0,"i":{"docs":{"16":{"tf":1.0}},"df":1}}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{"7":{"tf":1.0}},"df":1,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{"8":{"tf":1.0}},"df":1}}}},"s":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{"12":{"tf":1.4142135623730951},"15":{"tf":1.0}},"df":2}}}},"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{"17":{"tf":1.0}},"df":1}}}},"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"2":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0}},"df":5}}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{"17":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{"1":{"tf":1.0},"12":{"tf":1.0}},"df":2,"u":{"docs":{},"df":0,"m":{"docs":{"8":{"tf":1.0}},"df":1}}}},"u":{"docs":{"11":{"tf":1.4142135623730951}},"df":1}},"r":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0}},"df":1}}}},"s":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"12":{"tf":1.0}},"df":1}}}}}}},"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.7320508075688772},"13":{"tf":1.0},"18":{"tf":1.7320508075688772},"19":{"tf":2.23606797749979},"2":{"tf":1.0},"3":{"tf":1.4142135623730951},"5":{"tf":1.0},"8":{"tf":1.0}},"df":9,".":{"docs":{},"df":0,"j":{"docs":{},"df":0,"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"19":{"tf":1.0}},"df":1}}}}}}}},"n":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"14":{"tf":1.0},"17":{"tf":1.0},"19":{"tf":1.0}},"df":4}}},"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"13":{"tf":1.0}},"df":1}}}},"n":{"docs":{"0":{"tf":1.7320508075688772},"15":{"tf":1.7320508075688772},"16":{"tf":1.4142135623730951},"17":{"tf":1.7320508075688772},"18":{"tf":1.0},"19":{"tf":1.4142135623730951},"4":{"tf":2.0},"5":{"tf":1.0},"7":{"tf":1.4142135623730951},"8":{"tf":1.0},"9":{"tf":1.4142135623730951}},"df":11,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"0":{"tf":1.0},"4":{"tf":1.0},"7":{"tf":1.0}},"df":3}}}}}}}},"_":{"docs":{},"df":0,"g":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"18":{"tf":1.0}},"df":1}}}},"p":{"docs":{},"df":0,"e":{"docs":{"15":{"tf":2.0}},"df":1}},"x":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"10":{"tf":1.0},"16":{"tf":1.0}},"df":4}},"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"b":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"d":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"x":{"docs":{"10":{"tf":1.0}},"df":1}}}}}}}}}}}}}}},"m":{"docs":{},"df":0,"e":{"docs":{"18":{"tf":1.0}},"df":1}},"n":{"docs":{"17":{"tf":1.0}},"df":1}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"15":{"tf":1.0},"17":{"tf":1.0}},"df":2,".":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"_":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"u":{"docs":{},"df":0,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"q":{"docs":{"15":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}},"g":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{"16":{"tf":1.0}},"df":1}}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"1":{"tf":1.0},"17":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}},"df":4}}},"x":{"docs":{},"df":0,"t":{"docs":{"7":{"tf":1.0}},"df":1}}},"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"t":{"docs":{"16":{"tf":1.0},"2":{"tf":1.0}},"df":2}}}}},"o":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"15":{"tf":1.0},"3":{"tf":1.0},"8":{"tf":1.0}},"df":5,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"1":{"tf":1.0},"3":{"tf":1.0},"8":{"tf":1.0}},"df":3}}}}},"i":{"docs":{"7":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"m":{"docs":{"8":{"tf":1.0}},"df":1,"a":{"docs":{},"df":0,"l":{"docs":{"7":{"tf":1.4142135623730951}},"df":1}}}},"t":{"docs":{},"df":0,"e":{"docs":{"3":{"tf":1.0}},"df":1}}},"u":{"docs":{"5":{"tf":1.0}},"df":1,"m":{"docs":{},"df":0,"b":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"12":{"tf":1.0},"17":{"tf":1.0}},"df":2}}},"e":{"docs":{},"df":0,"r":{"docs":{"10":{"tf":1.0}},"df":1}}}},"y":{"docs":{"11":{"tf":1.0},"5":{"tf":1.0},"7":{"tf":1.0}},"df":3}},"o":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{},"df":0,"/":{"docs":{},"df":0,"s":{"docs":{},"df":0,"q":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,"(":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0}},"df":3}}}}}}}}},"b":{"docs":{},"df":0,"j":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"18":{"tf":1.0}},"df":1}}}},"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"v":{"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.0}},"df":2,"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"y":{"docs":{},"df":0,"/":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}},"c":{"docs":{},"df":0,"c":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{"5":{"tf":1.0}},"df":1}}}},"f":{"docs":{},"df":0,"f":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"8":{"tf":1.0}},"df":1}}}}},"l":{"docs":{"8":{"tf":1.0}},"df":1},"n":{"docs":{"0":{"tf":1.4142135623730951},"10":{"tf":1.0},"12":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.4142135623730951},"17":{"tf":1.0},"18":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0},"8":{"tf":1.0}},"df":10,"t":{"docs":{},"df":0,"o":{"docs":{"12":{"tf":1.0},"9":{"tf":1.0}},"df":2}}},"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"1":{"tf":1.0}},"df":1}},"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"17":{"tf":1.0}},"df":1}}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"l":{"docs":{"7":{"tf":1.0},"9":{"tf":1.0}},"df":2}}},"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0}},"df":1}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"7":{"tf":1.0}},"df":1}}}}}},"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"o":{"docs":{},"df":0,"g":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"12":{"tf":1.0},"9":{"tf":1.4142135623730951}},"df":2}}}}}}},"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"8":{"tf":1.0}},"df":1}}}},"u":{"docs":{},"df":0,"t":{"docs":{},"df":0,"/":{"docs":{},"df":0,"s":{"docs":{},"df":0,"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{"18":{"tf":1.0}},"df":1}}}}}},"p":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.0},"11":{"tf":1.4142135623730951},"14":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.4142135623730951},"3":{"tf":1.0},"8":{"tf":1.0}},"df":7,"_":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"r":{"docs":{"18":{"tf":1.0}},"df":1}}}}}}}}}},"p":{"docs":{"0":{"tf":1.7320508075688772},"1":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":2.449489742783178},"16":{"tf":1.4142135623730951},"18":{"tf":1.0},"19":{"tf":1.4142135623730951},"2":{"tf":1.0},"4":{"tf":3.0},"5":{"tf":1.4142135623730951},"7":{"tf":1.7320508075688772},"9":{"tf":2.0}},"df":12,"_":{"docs":{},"df":0,"r":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{"18":{"tf":1.4142135623730951}},"df":1}}}}},"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"r":{"docs":{"12":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0}},"df":3}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.0},"17":{"tf":1.0},"7":{"tf":1.0}},"df":3}}}},"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"17":{"tf":1.0},"3":{"tf":1.0},"5":{"tf":1.0},"7":{"tf":1.0},"9":{"tf":1.0}},"df":5}}}},"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{"0":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"19":{"tf":2.449489742783178},"7":{"tf":1.4142135623730951}},"df":5,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"b":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"s":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"{":{"docs":{},"df":0,"b":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"n":{"docs":{},"df":0,"_":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"_":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{"15":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}},"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"{":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"_":{"docs":{},"df":0,"p":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"j":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"k":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"{":{"docs":{},"df":0,"b":{"docs":{},"df":0,"u":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{},"df":0,"_":{"docs":{},"df":0,"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"k":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{"4":{"tf":1.0},"7":{"tf":1.0}},"df":2}}}}}}}}}}}}}}}}}}},"r":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"{":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"_":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"g":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"g":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"p":{"docs":{"17":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}},"m":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{"1":{"tf":1.0},"15":{"tf":1.0},"4":{"tf":1.0},"7":{"tf":1.0}},"df":4}}}}}}}}}}}}}}}}}}}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"z":{"docs":{},"df":0,"e":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"s":{"docs":{},"df":0,"v":{"docs":{},"df":0,"d":{"docs":{},"df":0,"_":{"docs":{},"df":0,"r":{"docs":{"10":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}},"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0},"5":{"tf":1.0}},"df":2}}}}}},"t":{"docs":{"16":{"tf":1.0}},"df":1}},"s":{"docs":{},"df":0,"t":{"docs":{"11":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0},"18":{"tf":1.0},"2":{"tf":1.0},"3":{"tf":1.4142135623730951},"4":{"tf":2.0},"5":{"tf":1.0},"8":{"tf":1.0}},"df":10}}},"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{"15":{"tf":1.0}},"df":1}}}}}},"r":{"docs":{"0":{"tf":1.0},"17":{"tf":1.7320508075688772},"18":{"tf":1.7320508075688772},"7":{"tf":1.0}},"df":4,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"8":{"tf":1.4142135623730951}},"df":1}}}},"t":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"b":{"docs":{"12":{"tf":1.0},"16":{"tf":1.0}},"df":2}}}}}},"h":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{"3":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{"16":{"tf":1.0},"8":{"tf":1.0}},"df":2}},"n":{"docs":{},"df":0,"v":{"docs":{},"df":0,"(":{"docs":{},"df":0,"[":{"docs":{},"df":0,"z":{"docs":{},"df":0,"_":{"docs":{},"df":0,"p":{"docs":{"7":{"tf":1.0}},"df":1}}}},"g":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"_":{"docs":{},"df":0,"f":{"docs":{"12":{"tf":1.0}},"df":1}}}}}}}}}},"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.4142135623730951},"17":{"tf":1.0}},"df":2}}}}}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0}},"df":1}}},"u":{"docs":{"5":{"tf":1.0}},"df":1}},"o":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"17":{"tf":1.7320508075688772},"18":{"tf":1.0}},"df":2}}},"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"13":{"tf":1.0}},"df":1}}}}}}}},"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{"4":{"tf":1.0}},"df":1}}},"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"5":{"tf":1.0}},"df":1,"o":{"docs":{},"df":0,"r":{"docs":{"1":{"tf":1.4142135623730951},"16":{"tf":1.0},"18":{"tf":1.0},"2":{"tf":1.0},"3":{"tf":1.0}},"df":5}}}}}},"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"v":{"docs":{"5":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"16":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"b":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.4142135623730951},"15":{"tf":1.0}},"df":2}}},"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{"0":{"tf":1.0},"5":{"tf":1.4142135623730951},"7":{"tf":1.0},"8":{"tf":1.0}},"df":4}}}},"c":{"docs":{},"df":0,"r":{"docs":{},"df":0,"u":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"n":{"docs":{"12":{"tf":1.0}},"df":1}}}}}}}}}}}}},"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{"3":{"tf":1.0},"9":{"tf":1.0}},"df":2,"t":{"docs":{"0":{"tf":1.4142135623730951},"7":{"tf":1.0}},"df":2}}}},"j":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"5":{"tf":1.0},"9":{"tf":1.7320508075688772}},"df":3,"o":{"docs":{},"df":0,"r":{"docs":{"9":{"tf":1.4142135623730951}},"df":1}}}}}},"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{"16":{"tf":1.0}},"df":1}}}}}},"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"u":{"docs":{},"df":0,"d":{"docs":{},"df":0,"o":{"docs":{"11":{"tf":1.0}},"df":1}}}}},"t":{"docs":{"17":{"tf":1.0}},"df":1},"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{"1":{"tf":1.0}},"df":1}}}},"q":{"docs":{},"df":0,"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{"17":{"tf":1.0}},"df":1},"t":{"docs":{},"df":0,"i":{"docs":{"13":{"tf":1.0}},"df":1}}}}}}}},"r":{"docs":{"0":{"tf":1.0},"10":{"tf":1.0}},"df":2,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"0":{"tf":1.0}},"df":1}}}}}}}},".":{"docs":{},"df":0,"l":{"docs":{},"df":0,"_":{"docs":{},"df":0,"p":{"docs":{"10":{"tf":1.0}},"df":1}}}},"a":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.4142135623730951},"12":{"tf":1.0},"16":{"tf":2.0}},"df":3},"u":{"docs":{"17":{"tf":1.0}},"df":1,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"i":{"docs":{"16":{"tf":1.0}},"df":1}}}}}},"n":{"docs":{},"df":0,"k":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"10":{"tf":1.7320508075688772},"3":{"tf":1.0},"8":{"tf":1.4142135623730951}},"df":5}},"t":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0},"17":{"tf":1.0}},"df":2},"i":{"docs":{},"df":0,"o":{"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"15":{"tf":1.0}},"df":3}}}},"e":{"docs":{"18":{"tf":1.4142135623730951},"19":{"tf":1.0}},"df":2,"a":{"docs":{},"df":0,"d":{"docs":{"1":{"tf":1.0},"11":{"tf":1.0}},"df":2},"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"z":{"docs":{"0":{"tf":1.7320508075688772},"1":{"tf":1.0},"10":{"tf":2.0},"11":{"tf":1.0},"12":{"tf":1.0},"17":{"tf":1.0}},"df":6,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"_":{"docs":{},"df":0,"b":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"16":{"tf":1.0}},"df":1}}}}}}}}}}},"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,".":{"docs":{},"df":0,"j":{"docs":{},"df":0,"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"19":{"tf":1.0}},"df":1}}}}}}}}}}},"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"11":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{"17":{"tf":1.0}},"df":1}},"v":{"docs":{"11":{"tf":1.0},"8":{"tf":1.0}},"df":2}},"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{"1":{"tf":1.4142135623730951},"14":{"tf":1.0},"3":{"tf":1.0}},"df":3}}}},"f":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{"15":{"tf":1.0}},"df":1}}}}}},"u":{"docs":{},"df":0,"s":{"docs":{"8":{"tf":1.0}},"df":1}}},"g":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"4":{"tf":1.0},"5":{"tf":1.0}},"df":2,"o":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.4142135623730951},"14":{"tf":1.0},"5":{"tf":2.0},"7":{"tf":1.0},"8":{"tf":1.4142135623730951}},"df":5}}}}}},"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"8":{"tf":1.0}},"df":1}}}}},"l":{"docs":{"7":{"tf":1.0}},"df":1},"m":{"docs":{},"df":0,"o":{"docs":{},"df":0,"v":{"docs":{"9":{"tf":1.0}},"df":1}}},"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"12":{"tf":1.0},"17":{"tf":1.0},"19":{"tf":1.0},"3":{"tf":1.0},"8":{"tf":1.0}},"df":7}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{"8":{"tf":1.0}},"df":1}},"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{"17":{"tf":1.0}},"df":1}}}}}},"r":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{"10":{"tf":1.0}},"df":1}}},"s":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{"3":{"tf":1.0}},"df":1}}}},"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"9":{"tf":1.0}},"df":2}}}},"t":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"n":{"docs":{"1":{"tf":1.0},"16":{"tf":1.0},"8":{"tf":1.4142135623730951}},"df":3}}}}},"h":{"docs":{},"df":0,"o":{"docs":{},"df":0,"(":{"docs":{},"df":0,"a":{"docs":{"1":{"tf":1.4142135623730951}},"df":1}}}},"o":{"docs":{},"df":0,"b":{"docs":{},"df":0,"u":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"12":{"tf":1.0}},"df":1}}}},"u":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0}},"df":1}}}},"w":{"docs":{"0":{"tf":1.0},"11":{"tf":1.7320508075688772},"14":{"tf":1.0},"16":{"tf":1.4142135623730951},"17":{"tf":1.0},"18":{"tf":1.0},"4":{"tf":1.4142135623730951},"5":{"tf":1.7320508075688772},"7":{"tf":2.6457513110645907},"8":{"tf":1.7320508075688772},"9":{"tf":1.0}},"df":11,"s":{"docs":{},"df":0,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"s":{"docs":{},"df":0,"v":{"docs":{"18":{"tf":1.4142135623730951},"19":{"tf":1.4142135623730951}},"df":2}}}}}}},"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{"18":{"tf":1.4142135623730951}},"df":1}},"n":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"13":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0}},"df":5}}},"s":{"docs":{},"df":0,"1":{"docs":{"15":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.7320508075688772},"2":{"tf":1.7320508075688772},"3":{"tf":1.0},"8":{"tf":1.0}},"df":8},"_":{"docs":{},"df":0,"1":{"docs":{"10":{"tf":1.4142135623730951}},"df":1,"^":{"docs":{},"df":0,"{":{"docs":{},"df":0,"1":{"docs":{},"df":0,"/":{"docs":{},"df":0,"2":{"docs":{"10":{"tf":1.4142135623730951}},"df":1}}}}}}},"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{"1":{"tf":1.4142135623730951},"17":{"tf":1.0},"18":{"tf":1.0},"5":{"tf":1.0}},"df":4},"p":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.4142135623730951},"13":{"tf":1.7320508075688772},"14":{"tf":1.0},"15":{"tf":1.4142135623730951},"16":{"tf":1.7320508075688772},"17":{"tf":1.0},"19":{"tf":1.0},"4":{"tf":1.4142135623730951}},"df":8}}},"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{"15":{"tf":1.0}},"df":1}}}}}},"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"10":{"tf":1.0},"2":{"tf":1.4142135623730951},"4":{"tf":1.0}},"df":3}},"e":{"docs":{"16":{"tf":1.4142135623730951}},"df":1}}}},"e":{"docs":{},"df":0,"e":{"docs":{"3":{"tf":1.0}},"df":1,"d":{"docs":{"1":{"tf":1.7320508075688772},"15":{"tf":1.0},"17":{"tf":1.4142135623730951},"19":{"tf":1.0}},"df":4}},"l":{"docs":{},"df":0,"f":{"docs":{"15":{"tf":1.0}},"df":1}},"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"5":{"tf":1.0}},"df":1}}},"q":{"docs":{},"df":0,"u":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{"1":{"tf":1.0}},"df":1}}}}},"t":{"docs":{"0":{"tf":1.0},"8":{"tf":1.0}},"df":2}},"h":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"t":{"docs":{"11":{"tf":1.0}},"df":1}}}},"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"_":{"docs":{"1":{"tf":1.0},"2":{"tf":1.0}},"df":2,"g":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"10":{"tf":1.0}},"df":1}}},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"x":{"docs":{"8":{"tf":1.0}},"df":1}}},"n":{"docs":{},"df":0,"x":{"docs":{"16":{"tf":1.4142135623730951}},"df":1}},"u":{"docs":{"1":{"tf":1.0},"2":{"tf":1.0}},"df":2}}}},"n":{"docs":{"10":{"tf":1.0}},"df":1,"a":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.0},"15":{"tf":1.0}},"df":2}}}},"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"8":{"tf":1.0}},"df":1}}}},"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0}},"df":1}}}},"u":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.0},"1":{"tf":2.0},"17":{"tf":1.0},"19":{"tf":1.0},"2":{"tf":1.0},"3":{"tf":1.0}},"df":6}}},"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"l":{"docs":{"5":{"tf":1.0}},"df":1},"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"10":{"tf":1.7320508075688772},"17":{"tf":1.0},"8":{"tf":1.4142135623730951}},"df":3}}}}}},"t":{"docs":{},"df":0,"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"8":{"tf":1.0}},"df":1}}}},"x":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{"15":{"tf":1.0}},"df":1}}}}}}},"z":{"docs":{},"df":0,"e":{"docs":{"16":{"tf":1.7320508075688772},"17":{"tf":1.0}},"df":2}}},"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{"17":{"tf":1.0},"18":{"tf":1.0}},"df":2}}}},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"15":{"tf":1.4142135623730951},"16":{"tf":1.0}},"df":2}}}}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"5":{"tf":1.0}},"df":1}}}},"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"p":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.4142135623730951}},"df":1}}}}},"r":{"docs":{"0":{"tf":1.0},"15":{"tf":1.7320508075688772},"16":{"tf":1.0}},"df":3,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"m":{"docs":{"15":{"tf":1.0}},"df":1}}},"_":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"u":{"docs":{"15":{"tf":1.4142135623730951}},"df":1}}}}}},"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"8":{"tf":1.0}},"df":1}},"v":{"docs":{"0":{"tf":1.0},"5":{"tf":1.0},"7":{"tf":1.4142135623730951}},"df":3,"e":{"docs":{},"df":0,"r":{"docs":{"7":{"tf":1.0},"8":{"tf":1.0}},"df":2}}}},"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{"8":{"tf":1.0}},"df":1}}}},"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"c":{"docs":{"0":{"tf":1.0}},"df":1}}}},"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{"9":{"tf":1.0}},"df":1}}},"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.0}},"df":1}}}},"q":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{},"df":0,"0":{"docs":{"16":{"tf":1.0}},"df":1}},"f":{"docs":{"16":{"tf":1.0}},"df":1}}}},"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"12":{"tf":1.0},"16":{"tf":1.0},"7":{"tf":1.0}},"df":4}}}},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{"1":{"tf":1.4142135623730951}},"df":1}},"c":{"docs":{},"df":0,"k":{"docs":{"0":{"tf":1.4142135623730951},"10":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.0},"7":{"tf":1.0}},"df":7}},"n":{"docs":{},"df":0,"d":{"docs":{"1":{"tf":1.0}},"df":1,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{"1":{"tf":1.0}},"df":1}}}}},"r":{"docs":{},"df":0,"t":{"docs":{"3":{"tf":1.0},"4":{"tf":1.4142135623730951}},"df":2}},"t":{"docs":{},"df":0,"e":{"docs":{"1":{"tf":1.4142135623730951},"11":{"tf":1.0},"14":{"tf":1.4142135623730951},"3":{"tf":1.0},"4":{"tf":1.0}},"df":5,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"k":{"docs":{"3":{"tf":1.0}},"df":1}}}}}}}}}}}}},"s":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{"1":{"tf":1.0}},"df":1,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"s":{"docs":{},"df":0,"1":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"15":{"tf":1.0},"4":{"tf":1.0},"7":{"tf":1.0}},"df":5}}}}}}}}}}}}}}},"u":{"docs":{"17":{"tf":1.0}},"df":1}}},"e":{"docs":{},"df":0,"p":{"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.0},"12":{"tf":1.0},"16":{"tf":1.0},"5":{"tf":1.4142135623730951}},"df":5}},"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{"16":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"16":{"tf":1.0},"2":{"tf":1.0}},"df":2}}}}},"r":{"docs":{},"df":0,"e":{"docs":{"1":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"1":{"tf":1.0}},"df":1}}}},"n":{"docs":{},"df":0,"g":{"docs":{"17":{"tf":1.0}},"df":1}}},"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{"1":{"tf":1.0},"3":{"tf":1.4142135623730951},"4":{"tf":1.0},"5":{"tf":1.0},"9":{"tf":1.0}},"df":5}}}}}},"y":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{"3":{"tf":1.0}},"df":1}}}},"u":{"docs":{},"df":0,"b":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"16":{"tf":1.0}},"df":1}}}}}}},"s":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{"0":{"tf":1.4142135623730951},"4":{"tf":1.0},"9":{"tf":1.0}},"df":3}}}}},"c":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"19":{"tf":1.0}},"df":1}}}},"h":{"docs":{"16":{"tf":1.0}},"df":1}},"i":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0},"9":{"tf":1.0}},"df":4}},"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"19":{"tf":1.0}},"df":1,"y":{"docs":{},"df":0,".":{"docs":{},"df":0,"j":{"docs":{},"df":0,"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"18":{"tf":1.0},"19":{"tf":1.0}},"df":2}}}}}}}}}}},"v":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"12":{"tf":1.0},"7":{"tf":1.0}},"df":4,"_":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"z":{"docs":{"10":{"tf":1.0}},"df":1,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,".":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"_":{"docs":{},"df":0,"g":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"_":{"docs":{},"df":0,"l":{"docs":{},"df":0,"p":{"docs":{"0":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}},"g":{"docs":{},"df":0,"l":{"docs":{"10":{"tf":1.0}},"df":1}}}}}}}}}}}}}},"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{"17":{"tf":2.0},"18":{"tf":1.4142135623730951},"19":{"tf":1.7320508075688772}},"df":3,"_":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"r":{"docs":{"19":{"tf":1.0}},"df":1}}}}}}}},"y":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{"10":{"tf":1.0}},"df":1}}}}},"n":{"docs":{},"df":0,"c":{"docs":{"0":{"tf":1.0}},"df":1}},"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{"0":{"tf":1.7320508075688772},"1":{"tf":1.4142135623730951},"11":{"tf":1.4142135623730951}},"df":3}}}}}},"t":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"11":{"tf":2.449489742783178},"12":{"tf":1.7320508075688772},"4":{"tf":1.0},"7":{"tf":1.0}},"df":6,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"16":{"tf":1.0},"5":{"tf":1.0}},"df":2}}}},"u":{"docs":{},"df":0,"_":{"docs":{},"df":0,"i":{"docs":{"15":{"tf":1.0}},"df":1}}}},"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{"16":{"tf":1.7320508075688772},"9":{"tf":1.0}},"df":2}},"s":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":2.0},"1":{"tf":1.0},"14":{"tf":1.0},"4":{"tf":1.0},"7":{"tf":1.0},"9":{"tf":1.0}},"df":6}}},"h":{"docs":{"5":{"tf":1.0},"7":{"tf":1.0}},"df":2,"e":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"15":{"tf":1.0}},"df":1}},"i":{"docs":{"3":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"f":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"5":{"tf":1.0}},"df":1}}}}},"t":{"docs":{},"df":0,"a":{"docs":{"8":{"tf":1.0}},"df":1,"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"_":{"docs":{},"df":0,"b":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"15":{"tf":1.0},"16":{"tf":1.0}},"df":2,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"m":{"docs":{"15":{"tf":1.4142135623730951}},"df":1}}}}}}}}}}}}}},"i":{"docs":{"7":{"tf":1.0}},"df":1}}}}},"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{"14":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"g":{"docs":{},"df":0,"h":{"docs":{"9":{"tf":1.0}},"df":1}}}}}},"i":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.7320508075688772},"14":{"tf":1.0},"15":{"tf":1.0}},"df":3}}},"o":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"z":{"docs":{"3":{"tf":1.0},"5":{"tf":1.0}},"df":2,"_":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"k":{"docs":{},"df":0,"o":{"docs":{},"df":0,"v":{"docs":{},"df":0,"(":{"docs":{},"df":0,"f":{"docs":{"3":{"tf":1.0}},"df":1}}}}}}}}}}}}}}},"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{"1":{"tf":1.0},"12":{"tf":1.0}},"df":2}}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"j":{"docs":{},"df":0,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"s":{"docs":{},"df":0,"v":{"docs":{"19":{"tf":1.0}},"df":1}}}},"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"1":{"tf":1.0},"4":{"tf":1.4142135623730951},"8":{"tf":1.0}},"df":3}}}}}}},"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"f":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{"0":{"tf":1.0},"12":{"tf":1.0}},"df":2}}}}}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"8":{"tf":1.0}},"df":1}}},"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"14":{"tf":1.0},"15":{"tf":1.0},"17":{"tf":2.6457513110645907},"18":{"tf":1.4142135623730951}},"df":4,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{"17":{"tf":1.0}},"df":1,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{"17":{"tf":1.0}},"df":1}}}}}}},"’":{"docs":{"17":{"tf":1.0}},"df":1}},"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"3":{"tf":1.0},"5":{"tf":1.0}},"df":2}}}}}}}},"u":{"docs":{},"df":0,"e":{"docs":{"12":{"tf":1.0},"7":{"tf":1.0}},"df":2,"_":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{"7":{"tf":1.0}},"df":1,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"m":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}}}}},"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.0},"10":{"tf":1.0},"16":{"tf":1.4142135623730951},"2":{"tf":1.0}},"df":4}}}},"t":{"docs":{},"df":0,"h":{"docs":{"12":{"tf":1.0},"7":{"tf":1.0}},"df":2,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}}}}},"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"n":{"docs":{"17":{"tf":1.0}},"df":1}}},"w":{"docs":{},"df":0,"o":{"docs":{"10":{"tf":1.0},"8":{"tf":1.4142135623730951}},"df":2}}},"u":{"docs":{"1":{"tf":1.4142135623730951},"4":{"tf":1.0}},"df":2,"_":{"docs":{},"df":0,"1":{"docs":{"10":{"tf":1.4142135623730951}},"df":1},"f":{"docs":{"4":{"tf":1.0},"5":{"tf":1.0},"9":{"tf":1.7320508075688772}},"df":3,"^":{"docs":{},"df":0,"t":{"docs":{"9":{"tf":1.7320508075688772}},"df":1}}},"i":{"docs":{"14":{"tf":1.0},"5":{"tf":1.0},"7":{"tf":1.0}},"df":3},"k":{"docs":{"0":{"tf":1.0},"3":{"tf":1.0},"8":{"tf":1.0}},"df":3},"p":{"docs":{"3":{"tf":1.0},"4":{"tf":1.7320508075688772}},"df":2}},"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"q":{"docs":{},"df":0,"u":{"docs":{"8":{"tf":1.0}},"df":1}},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"12":{"tf":1.0}},"df":1}}}}},"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"k":{"docs":{"9":{"tf":1.0}},"df":1}}}},"p":{"docs":{"0":{"tf":1.0},"11":{"tf":1.0}},"df":2},"s":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"10":{"tf":1.4142135623730951},"12":{"tf":1.0},"13":{"tf":1.0},"15":{"tf":1.4142135623730951},"17":{"tf":1.0},"2":{"tf":1.0},"4":{"tf":1.4142135623730951},"5":{"tf":1.0},"7":{"tf":1.7320508075688772}},"df":11}},"v":{"docs":{},"df":0,"_":{"docs":{},"df":0,"1":{"docs":{},"df":0,"^":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.4142135623730951}},"df":1}}}},"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"1":{"tf":1.0},"14":{"tf":1.0},"19":{"tf":1.0}},"df":3}},"u":{"docs":{"10":{"tf":1.4142135623730951},"17":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.4142135623730951}},"df":4}},"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"h":{"docs":{"2":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{"15":{"tf":1.0}},"df":1}}}}}},"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"<":{"docs":{},"df":0,"(":{"docs":{},"df":0,"u":{"docs":{},"df":0,"s":{"docs":{"17":{"tf":1.0}},"df":1}}}},"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"10":{"tf":1.4142135623730951}},"df":1}}}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0}},"df":1}}}}}},"w":{"docs":{},"df":0,"a":{"docs":{},"df":0,"y":{"docs":{"3":{"tf":1.0},"8":{"tf":1.0}},"df":2}},"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.0}},"df":1}},"n":{"docs":{},"df":0,"t":{"docs":{"8":{"tf":1.0}},"df":1}}},"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"10":{"tf":1.0}},"df":1}}}}},"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{"16":{"tf":1.0},"7":{"tf":1.0}},"df":2}}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{"3":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0},"8":{"tf":1.0}},"df":4}}}},"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"8":{"tf":1.0}},"df":1}}}}}},"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{"8":{"tf":1.0}},"df":1}}}}},"x":{"docs":{"1":{"tf":1.0},"9":{"tf":1.0}},"df":2,"_":{"docs":{},"df":0,"1":{"docs":{"1":{"tf":1.0},"3":{"tf":1.0}},"df":2},"k":{"docs":{"0":{"tf":1.4142135623730951},"3":{"tf":1.0},"4":{"tf":1.0}},"df":3},"{":{"docs":{},"df":0,"k":{"docs":{"4":{"tf":1.0}},"df":1,"+":{"docs":{},"df":0,"1":{"docs":{"0":{"tf":1.0}},"df":1}}}}}},"y":{"docs":{"1":{"tf":1.0},"4":{"tf":1.0}},"df":2,"_":{"docs":{},"df":0,"f":{"docs":{"4":{"tf":1.0},"5":{"tf":1.0},"9":{"tf":1.0}},"df":3},"k":{"docs":{"0":{"tf":1.0},"3":{"tf":1.0},"8":{"tf":1.0}},"df":3},"p":{"docs":{"3":{"tf":1.0},"4":{"tf":1.7320508075688772}},"df":2},"{":{"docs":{},"df":0,"f":{"docs":{},"df":0,",":{"docs":{},"df":0,"i":{"docs":{"5":{"tf":1.0},"7":{"tf":1.0}},"df":2}}},"k":{"docs":{},"df":0,"+":{"docs":{},"df":0,"1":{"docs":{"3":{"tf":1.0},"8":{"tf":1.0}},"df":2}}}}},"i":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.0},"18":{"tf":1.0},"7":{"tf":1.4142135623730951}},"df":3}}}}},"z":{"docs":{"5":{"tf":1.0}},"df":1,"^":{"docs":{},"df":0,"t":{"docs":{"5":{"tf":1.0}},"df":1}},"_":{"docs":{},"df":0,"p":{"docs":{"14":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.4142135623730951},"7":{"tf":1.0},"9":{"tf":1.0}},"df":5,"^":{"docs":{},"df":0,"t":{"docs":{"9":{"tf":1.4142135623730951}},"df":1}}}},"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{"14":{"tf":1.0},"16":{"tf":1.0},"3":{"tf":1.0},"8":{"tf":1.0}},"df":4}}}}}},"title":{"root":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"n":{"docs":{"12":{"tf":1.0}},"df":1}}}},"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{"4":{"tf":1.0}},"df":1}}}}}}},"b":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{"10":{"tf":1.0}},"df":1}}}},"n":{"docs":{},"df":0,"k":{"docs":{"5":{"tf":1.0},"7":{"tf":1.0}},"df":2}},"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"9":{"tf":1.0}},"df":1}}}}}},"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"13":{"tf":1.0}},"df":1}}}},"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"n":{"docs":{"15":{"tf":1.0}},"df":1}}}},"c":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{"9":{"tf":1.0}},"df":1}}}}},"i":{"docs":{"17":{"tf":1.0}},"df":1}},"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"19":{"tf":1.0}},"df":1}}}}},"n":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{"18":{"tf":1.0}},"df":1}}}}}},"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"14":{"tf":1.4142135623730951}},"df":1}}}}}},"d":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{"4":{"tf":1.0}},"df":1}}}},"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"12":{"tf":1.0},"16":{"tf":1.0}},"df":2}}}},"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{"6":{"tf":1.0}},"df":1}}}},"x":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"14":{"tf":1.0}},"df":1}}},"c":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"8":{"tf":1.0}},"df":1}}},"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"11":{"tf":1.0}},"df":1}}}}}}},"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"13":{"tf":1.0}},"df":1}}},"x":{"docs":{},"df":0,"t":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{"2":{"tf":1.0}},"df":1}}}}}},"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"k":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{"4":{"tf":1.0}},"df":1}}}}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{"19":{"tf":1.0}},"df":1}}}}},"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1}}}}}}}}},"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{"19":{"tf":1.0}},"df":1}}}},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{"11":{"tf":1.0},"3":{"tf":1.0}},"df":2}}}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{"12":{"tf":1.0}},"df":1}}}}},"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{"1":{"tf":1.0}},"df":1}}}}},"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{"7":{"tf":1.0}},"df":1}}}}},"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"8":{"tf":1.0}},"df":1}}}}}},"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"j":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"9":{"tf":1.0}},"df":1}}}}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"i":{"docs":{"16":{"tf":1.0}},"df":1}}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"z":{"docs":{"10":{"tf":1.0}},"df":1}}}},"g":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"5":{"tf":1.0}},"df":1}}}}}}}}},"s":{"docs":{},"df":0,"1":{"docs":{"2":{"tf":1.0}},"df":1},"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{"13":{"tf":1.0}},"df":1}}}},"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"2":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"m":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{"1":{"tf":1.0}},"df":1}}}},"n":{"docs":{},"df":0,"r":{"docs":{"15":{"tf":1.0}},"df":1}},"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{"3":{"tf":1.0}},"df":1}}}}}}},"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{"17":{"tf":1.0}},"df":1}}}},"y":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{"11":{"tf":1.0}},"df":1}}}}}}}}},"documentStore":{"save":true,"docs":{"0":{"body":"parsim identifies linear time-invariant systems in innovations form x_{k+1} = A x_k + B u_k + K e_k\\ny_k = C x_k + e_k from input/output data, using a parsimonious subspace method: instead\\nof one large projection, it solves f causal ARX least-squares problems\\nin parallel — one per future time step — and stacks the results into an\\nestimate of the product Gamma_f L_p of the extended observability and\\ncontrollability matrices. A rank- n_x SVD of that product then yields a\\nbalanced realization and the system matrices (A, B, C, K) up to a\\nsimilarity transform. What sets the crate apart from a plain subspace-identification routine\\nis that every step comes with finite-sample diagnostics: the exact covariance of the regressor, computed in closed form from\\nthe model, and the derived signal-to-noise ratio; a burn-in time: the sample count after which the empirical\\nregressor covariance is guaranteed (with high probability) to be well\\nconditioned; high-probability error radii for the ARX rows, the stacked\\nestimate and the realized system matrices, all decaying as O(1/sqrt(N)); a Monte Carlo harness that verifies the 1/sqrt(N) rate empirically\\nand reports how often the observed errors fall inside the radii. The pipeline in four lines (this snippet is the crate-level doc-test,\\nkept in sync by cargo test): let m = StateSpaceModel::s1();\\nlet (p, f, n) = (2, 3, 2000);\\nlet t = m.simulate(p + f + n - 1, 42, false).unwrap();\\nlet h = build_hankels(&t, p, f, n).unwrap();\\nlet est = estimate_parsim_bank(&build_regressor_bank(&h)).unwrap();\\nlet r = svd_realize(&est.stacked_gamma_lp, m.nx()).unwrap();\\nlet aligned = align_similarity(&m, p, f, &r).unwrap();\\nassert!(aligned.err_a < 0.05); // high SNR, N = 2000 Every code block in this guide mirrors a doc-test in the crate sources,\\nso the snippets are compiled and executed on every cargo test run.\\nThe chapters follow the pipeline in order: model and simulation, data\\nassembly, estimation, realization, bounds, and finally the experiment\\nharness and command-line interface.","breadcrumbs":"Introduction » Introduction","id":"0","title":"Introduction"},"1":{"body":"A StateSpaceModel holds the matrices (A, B, C, K) together with the\\ninput and innovation standard deviations sigma_u and sigma_e. The\\nconstructor checks dimensions; validate checks the standing\\nassumptions: rho(A) <= 1 + eps: the open-loop system may be marginally stable; rho(A - K C) < 1 - eps: the predictor (closed-loop) dynamics must\\nbe strictly stable, since the method truncates the predictor\\nrecursion after p steps; (A, C) observable and (A, [B K]) controllable, so the system is\\nminimal and a rank- n_x realization exists. simulate draws u and e i.i.d. Gaussian from a counter-based\\nseeded generator (inputs first, then innovations, so the input sequence\\nfor a given seed is independent of the noiseless flag) and runs the\\nrecursion from x_1 = 0: use parsim::model::StateSpaceModel; let m = StateSpaceModel::s1();\\nassert!(m.validate(false).passed());\\nlet t = m.simulate(100, 7, false).unwrap();\\nassert_eq!(t.len(), 100);\\n// same seed, same data\\nassert_eq!(t.y, m.simulate(100, 7, false).unwrap().y); The returned Trajectory stores u, y and also the latent states x and innovations e. The latent channels exist purely so that the\\ntest-suite can check structural identities (for example that the future\\noutputs decompose exactly into state, input and noise contributions);\\nthe estimators never read them.","breadcrumbs":"Models and Simulation » Models and Simulation","id":"1","title":"Models and Simulation"},"10":{"body":"The stacked estimate of Gamma_f L_p has (numerical) rank n_x. Its\\ntruncated SVD Gamma_f L_p ~ U_1 S_1 V_1^T,\\nGamma_hat = U_1 S_1^{1/2}, L_hat = S_1^{1/2} V_1^T splits the singular values symmetrically between the two factors, so\\nthe realization is balanced: both Gramians Gamma^T Gamma and L L^T equal the diagonal S_1. Singular-vector signs are fixed by\\nmaking the largest-magnitude entry of each left vector positive, which\\nkeeps reruns byte-identical. use nalgebra::DMatrix;\\nuse parsim::realize::svd_realize; // Gamma_2 L_1 of the scalar fixture, a rank-one matrix\\nlet gl = DMatrix::from_row_slice(2, 2, &[0.5, 1.0, 0.25, 0.5]);\\nlet r = svd_realize(&gl, 1).unwrap();\\nassert!((r.singular_values[0] - 1.25).abs() < 1e-12);\\nassert!(((&r.gamma_f * &r.l_p) - gl).norm() < 1e-12); svd_realize also reports sigma_gap, the ratio between the last kept\\nand first discarded singular value — a diagnostic for whether the rank\\nchoice was clear-cut.","breadcrumbs":"Balanced Realization » Balanced Realization","id":"10","title":"Balanced Realization"},"11":{"body":"From the factors, extract_system reads off: C — the first ny rows of Gamma_hat; A — shift invariance: the pseudo-inverse of Gamma_hat minus its\\nlast block row, applied to Gamma_hat minus its first block row; K — the last output block of L_hat (columns of the most recent\\npast output); B — the last input block of L_hat. All four are recovered only up to an invertible change of state basis T: the data cannot distinguish (A, B, C, K) from (T^{-1} A T, T^{-1} B, C T, T^{-1} K).","breadcrumbs":"Balanced Realization » Extracting the system matrices","id":"11","title":"Extracting the system matrices"},"12":{"body":"To compare an estimate against a known truth the basis must be fixed. align_similarity computes T = pinv(Gamma_f) * Gamma_hat (the least\\nsquares map from the estimated factor onto the true one) and reports\\nthe errors of all matrices after applying it, together with the\\ncondition number of T. The robustness analysis of the SVD step\\ninstead uses an orthogonal alignment: procrustes_align finds the\\nunitary T minimizing the combined mismatch of both factor pairs,\\nwhich is the transform appearing in the perturbation radii of the\\nbounds chapter.","breadcrumbs":"Balanced Realization » Alignment for error measurement","id":"12","title":"Alignment for error measurement"},"13":{"body":"Everything in this chapter is computed from the model, with no data:\\nthese are the quantities a practitioner would use to decide how much\\ndata to collect before running the estimator.","breadcrumbs":"Finite-Sample Bounds » Finite-Sample Bounds","id":"13","title":"Finite-Sample Bounds"},"14":{"body":"covariate_covariance(m, p, i, k) is the exact covariance of the row- i\\nregressor [z_p; u_i] at time k, assembled in closed form from the\\nstate covariance recursion and the cross-covariances between states,\\noutputs and inputs (future inputs are independent of the past, so those\\nblocks are exactly zero). The test-suite validates it against a\\n100 000-trial Monte Carlo estimate.","breadcrumbs":"Finite-Sample Bounds » Exact covariate covariance","id":"14","title":"Exact covariate covariance"},"15":{"body":"The signal-to-noise ratio divides the smallest eigenvalue of that\\ncovariance by the innovation variance. The burn-in time is the smallest N satisfying a self-referential inequality of the form N >= c0 * tau_i * max(sigma_e^2, 1) * (log(1/delta) + d_i * log C(N)),\\nfound by doubling and bisection; past it, the empirical covariance is\\nguaranteed with probability 1 - delta to dominate one sixteenth of\\nits theoretical counterpart ( pe_check measures exactly that margin on\\ndata). use parsim::model::StateSpaceModel;\\nuse parsim::bounds::{burn_in_time, snr, theta_error_bound}; let m = StateSpaceModel::s1();\\nlet (p, f, i) = (2, 3, 1);\\nlet snr_tau = snr(&m, p, i, i + p);\\nassert!(snr_tau.is_finite() && snr_tau > 0.0);\\nlet n_pe = burn_in_time(&m, p, i, 0.05, 1.0, 1 << 30).unwrap();\\nlet near = theta_error_bound(&m, p, f, i, n_pe, 0.05, 1.0).unwrap();\\nlet far = theta_error_bound(&m, p, f, i, 8 * n_pe, 0.05, 1.0).unwrap();\\nassert!(far.theta_radius_sq < near.theta_radius_sq); For S1 the burn-in at delta = 0.05 is a few hundred samples, and\\nthe acceptance suite confirms the guarantee empirically: at N = N_pe\\nthe excitation condition held in 100 of 100 seeded trials.","breadcrumbs":"Finite-Sample Bounds » SNR and burn-in","id":"15","title":"SNR and burn-in"},"16":{"body":"theta_error_bound returns squared radii for row i: a stochastic term scaling as log-factors / (SNR * N) — the O(1/sqrt(N)) part; a truncation bias term scaling as 1/N^2, proportional to the\\nenergy the predictor still carries after p steps (identically zero\\nfor nilpotent fixtures such as S1). Both are linear in log(1/delta). The stacked estimate inherits sqrt(f) * max_i radius_i, and realization_bound converts a\\nperturbation of size Delta <= sigma_nx / 4 into radii for the\\nfactors ( 2 * sqrt(10 n_x / sigma_nx) * Delta), the extracted C, K, B, and A. The choice of past horizon is automated by choose_past_horizon, which picks the smallest p ~ beta log N whose\\ntruncation term is negligible at the target sample size. bound_report bundles all of the above for one row at one sample size —\\nthis is what the parsim bounds CLI subcommand prints.","breadcrumbs":"Finite-Sample Bounds » Error radii","id":"16","title":"Error radii"},"17":{"body":"The harness turns the pipeline into a reproducible Monte Carlo\\nexperiment: a grid of sample sizes, a number of trials per grid point,\\nand deterministic per-trial seeds derived by hashing (N, trial) into\\nthe base seed — so adding grid points or running trials in parallel\\nnever changes an individual trial’s data. use parsim::harness::{fit_loglog_slope, trial_seed}; let pts: Vec<(usize, f64)> = [100, 400, 1600] .iter() .map(|&n| (n, 1.0 / (n as f64).sqrt())) .collect();\\nlet fit = fit_loglog_slope(&pts).unwrap();\\nassert!((fit.slope + 0.5).abs() < 1e-12);\\nassert_ne!(trial_seed(1, 100, 0), trial_seed(1, 100, 1)); Each trial simulates, assembles, estimates (PARSIM and optionally the\\nclassical baseline on the same data), realizes, aligns, and records one\\nCSV row: parameter errors, stacked error, aligned matrix errors, the\\nexcitation margin and the singular-value gap. Failed trials are kept\\nwith a status string and NaN metrics rather than dropped. Per grid\\npoint the sweep reports medians and quantiles, the bound radius with\\nthe configured constants, and the fraction of trials inside it; across\\nthe grid it fits log-log slopes, which for S1 land near -0.5 — the O(1/sqrt(N)) rate.","breadcrumbs":"Sweeps and the CLI » Sweeps and the CLI","id":"17","title":"Sweeps and the CLI"},"18":{"body":"A sweep is a JSON file: { \\"model\\": \\"s1\\", \\"f\\": 5, \\"p_rule\\": { \\"rule\\": \\"fixed\\", \\"p\\": 2 }, \\"n_grid\\": [250, 500, 1000, 2000, 4000, 8000], \\"trials\\": 50, \\"delta\\": 0.05, \\"base_seed\\": 7, \\"estimator\\": \\"both\\", \\"output_dir\\": \\"out/sweep\\"\\n} model is either a fixture name or an inline model object; p_rule may also be { \\"rule\\": \\"assumption2\\", \\"beta_grid\\": [...] } to\\nre-derive the past horizon per grid point from the predictor decay\\ncondition. Outputs are rows.csv (one row per trial) and summary.json (per- N aggregates and slopes). Re-running the same\\nconfig yields byte-identical rows.csv.","breadcrumbs":"Sweeps and the CLI » Configuration","id":"18","title":"Configuration"},"19":{"body":"parsim validate <model.json> # check the model assumptions\\nparsim simulate --model s1 --samples 500 --seed 3 --output traj.csv\\nparsim identify --model s1 --n 2000 --p 2 --f 3 [--output realized.json]\\nparsim bounds --model s1 --p 2 --f 3 --n 1000 [--delta 0.05]\\nparsim sweep <config.json> # Monte Carlo sweep -> rows.csv, summary.json\\nparsim report <sweep_dir> # re-summarize an existing rows.csv Exit codes: 0 on success, 2 for excitation/sweep failures, 3 for\\ninvalid configurations or models, 1 for other errors.","breadcrumbs":"Sweeps and the CLI » Command-line interface","id":"19","title":"Command-line interface"},"2":{"body":"Most examples use the fixture S1: A = 0.5, B = 1, C = 1, K = 0.5, sigma_u = 1, sigma_e = 0.1 Its closed-loop matrix is A - KC = 0, i.e. the predictor is nilpotent: the truncation bias of the method vanishes identically for\\nany past horizon p >= 1, which isolates the stochastic error in\\nexperiments.","breadcrumbs":"Models and Simulation » The scalar fixture S1","id":"2","title":"The scalar fixture S1"},"3":{"body":"The model also produces the matrices the theory is phrased in: extended_observability(f) — the stack of C, CA, ..., CA^{f-1}; extended_controllability(p) — the predictor-form map from the past\\nwindow [Y_p; U_p] to the state; toeplitz_markov(f, channel) — block lower-triangular Toeplitz\\nmatrices of impulse-response (Markov) parameters, with a zero block\\ndiagonal for the input channel and an identity diagonal for the noise\\nchannel; state_covariance(k) — the exact covariance of x_k from the\\nLyapunov-style recursion started at x_1 = 0. A note on the noiseless flag: with e = 0 the output becomes an exact\\nlinear function of past data (for S1, y_{k+1} = 0.5 y_k + u_k), so\\nidentification data generated this way is rank-deficient by\\nconstruction. See the estimator chapter for how that case is reported.","breadcrumbs":"Models and Simulation » Structural matrices","id":"3","title":"Structural matrices"},"4":{"body":"Subspace methods arrange one long trajectory into block-Hankel\\nmatrices. With past horizon p, future horizon f and N regression\\ncolumns, a trajectory of length p + f + N - 1 fills: U_p, Y_p — p block rows of past inputs/outputs, stacked into Z_p = [Y_p; U_p]; U_f, Y_f — f block rows of future inputs/outputs; E_f, X_k, X_{k-p} — innovation and state analogues, carried\\nalong only for structural tests. Column j of the past matrices starts at sample j; the future\\nmatrices start p samples later, so each column pairs a past window\\nwith the future it precedes. use parsim::model::StateSpaceModel;\\nuse parsim::hankel::{build_hankels, build_regressor_bank}; let m = StateSpaceModel::s1();\\nlet (p, f, n) = (2, 3, 40);\\nlet t = m.simulate(p + f + n - 1, 1, false).unwrap();\\nlet h = build_hankels(&t, p, f, n).unwrap();\\nassert_eq!(h.z_p.nrows(), 2 * p); // [Y_p; U_p], scalar u and y\\nlet bank = build_regressor_bank(&h);\\nassert_eq!(bank.problems.len(), f);\\nassert_eq!(bank.problems[0].d_i(), 2 * p + 1);","breadcrumbs":"Hankel Data Assembly » Hankel Data Assembly","id":"4","title":"Hankel Data Assembly"},"5":{"body":"The parsimonious method does not regress all of Y_f on the same\\nmatrix. Row i (the i-th future step) is causal: its prediction\\nmay use the past window Z_p plus only the first i block rows of U_f — future inputs that have already occurred by step i. The bank\\ntherefore holds f problems with growing regressor dimension d_i = p * ny + (p + i) * nu, each pairing the regressor [Z_p; U_i] with the target block row Y_{f,i}. Solving them separately is exactly what preserves the\\nlower-triangular Toeplitz structure of the input Markov parameters that\\na single joint projection would smear. empirical_covariance computes Z Z^T / N for one bank problem; the\\nbounds chapter compares it against its exact model-implied counterpart.","breadcrumbs":"Hankel Data Assembly » The regressor bank","id":"5","title":"The regressor bank"},"6":{"body":"","breadcrumbs":"The Estimators » The Estimators","id":"6","title":"The Estimators"},"7":{"body":"Each row i solves an ordinary least-squares problem theta_i = Y_{f,i} * pinv([Z_p; U_i]), whose true value is [Gamma_{f,i} L_p | G_{f,i}]: the i-th block row\\nof the observability/controllability product next to the first i\\ninput Markov parameters. The rows are independent, so the bank is\\nsolved in parallel. Stacking the Z_p columns of all rows yields the\\nestimate of Gamma_f L_p; the G columns yield per-row Markov\\nestimates and their across-row mean. use parsim::model::StateSpaceModel;\\nuse parsim::hankel::{build_hankels, build_regressor_bank};\\nuse parsim::estimate::{estimate_classical_projection, estimate_parsim_bank, true_theta}; let m = StateSpaceModel::s1();\\nlet (p, f, n) = (2, 3, 4000);\\nlet t = m.simulate(p + f + n - 1, 9, false).unwrap();\\nlet h = build_hankels(&t, p, f, n).unwrap();\\nlet est = estimate_parsim_bank(&build_regressor_bank(&h)).unwrap();\\nlet truth = true_theta(&m, p, f, 1).unwrap();\\nassert!((&est.thetas[0] - &truth).norm() < 0.2);\\nlet classical = estimate_classical_projection(&h).unwrap();\\nassert_eq!(classical.nrows(), f); // f * ny rows The solver factors the regressor by SVD rather than forming normal\\nequations, and cargo test checks it against a literal\\nnormal-equations oracle to 1e-8 relative on noisy data.","breadcrumbs":"The Estimators » The PARSIM bank","id":"7","title":"The PARSIM bank"},"8":{"body":"OLS is only meaningful when the regressor has full row rank. The solver\\ntreats singular values below max(d_i, N) * eps * sigma_max as zero\\nand then refuses to continue, returning an excitation-failure error\\ncarrying the offending row and singular value. It never regularizes\\nsilently: a rank-deficient problem has an affine set of solutions, and\\npicking the minimum-norm representative would return a biased answer\\nwithout any indication that something went wrong. The canonical way to hit this is noiseless data. With e = 0 the\\noutput is an exact linear function of the windowed past (for S1, y_{k+1} = 0.5 y_k + u_k), one regressor row is a combination of two\\nothers, and the noise gain K no longer influences the data at all —\\ntwo models differing only in K generate identical trajectories, so no\\nestimator could recover theta uniquely. The excitation failure is the\\nhonest report of that situation.","breadcrumbs":"The Estimators » Persistence of excitation","id":"8","title":"Persistence of excitation"},"9":{"body":"The classical subspace estimator removes the future-input term by\\nprojecting onto the orthogonal complement of the row space of U_f: Gamma_f L_p ~ Y_f P Z_p^T (Z_p P Z_p^T)^{-1}, P = I - U_f^T (U_f U_f^T)^{-1} U_f. The projector is applied implicitly through an orthogonal factorization\\nof U_f^T — the dense N x N matrix P is never formed — and the\\ntest-suite compares the result against a literal dense-projector oracle.\\nThe baseline estimates only Gamma_f L_p; unlike the bank it does not\\nproduce the structured Markov parameters.","breadcrumbs":"The Estimators » The classical projection baseline","id":"9","title":"The classical projection baseline"}},"docInfo":{"0":{"body":205,"breadcrumbs":2,"title":1},"1":{"body":130,"breadcrumbs":4,"title":2},"10":{"body":101,"breadcrumbs":4,"title":2},"11":{"body":61,"breadcrumbs":5,"title":3},"12":{"body":51,"breadcrumbs":5,"title":3},"13":{"body":15,"breadcrumbs":6,"title":3},"14":{"body":41,"breadcrumbs":6,"title":3},"15":{"body":112,"breadcrumbs":5,"title":2},"16":{"body":90,"breadcrumbs":5,"title":2},"17":{"body":126,"breadcrumbs":4,"title":2},"18":{"body":68,"breadcrumbs":3,"title":1},"19":{"body":68,"breadcrumbs":5,"title":3},"2":{"body":36,"breadcrumbs":5,"title":3},"3":{"body":79,"breadcrumbs":4,"title":2},"4":{"body":115,"breadcrumbs":6,"title":3},"5":{"body":79,"breadcrumbs":5,"title":2},"6":{"body":0,"breadcrumbs":2,"title":1},"7":{"body":114,"breadcrumbs":3,"title":2},"8":{"body":94,"breadcrumbs":3,"title":2},"9":{"body":63,"breadcrumbs":4,"title":3}},"length":20},"lang":"English"}}'));